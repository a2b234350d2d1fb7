"""Exact arithmetic on extended rationals and queries on the Farey tessellation.

A slope is an extended rational number p/q in lowest terms; the single point
at infinity is stored as 1/0 and sits above every finite slope in the total
order.  Two slopes p/q and r/s span an edge of the Farey tessellation exactly
when |p*s - q*r| = 1.  Everything here is integer arithmetic on
arbitrary-precision ints; there is no floating point anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from math import gcd


class FareyError(ValueError):
    """A slope argument violates the contract of a Farey operation."""


@total_ordering
@dataclass(frozen=True)
class Slope:
    """An extended rational p/q, canonicalized on construction.

    Invariants: gcd(|p|, q) = 1; q > 0 for finite slopes (sign lives on the
    numerator); infinity is exactly the pair (1, 0).
    """

    numerator: int
    denominator: int = 1

    def __post_init__(self) -> None:
        p, q = self.numerator, self.denominator
        if q == 0:
            if p == 0:
                raise FareyError("0/0 is not a slope")
            p = 1
        else:
            if q < 0:
                p, q = -p, -q
            g = gcd(abs(p), q)
            p //= g
            q //= g
        object.__setattr__(self, "numerator", p)
        object.__setattr__(self, "denominator", q)

    @property
    def is_infinite(self) -> bool:
        return self.denominator == 0

    def __lt__(self, other: object) -> bool:
        if not isinstance(other, Slope):
            return NotImplemented
        if self == other or self.is_infinite:
            return False
        if other.is_infinite:
            return True
        return self.numerator * other.denominator < other.numerator * self.denominator

    def __neg__(self) -> Slope:
        if self.is_infinite:
            return self
        return Slope(-self.numerator, self.denominator)

    def as_fraction(self) -> Fraction:
        if self.is_infinite:
            raise FareyError("infinity has no fraction value")
        return Fraction(self.numerator, self.denominator)

    @classmethod
    def from_fraction(cls, value: Fraction | int) -> Slope:
        value = Fraction(value)
        return cls(value.numerator, value.denominator)

    def __str__(self) -> str:
        if self.is_infinite:
            return "inf"
        return f"{self.numerator}/{self.denominator}"

    def __repr__(self) -> str:
        return f"Slope({self.numerator}, {self.denominator})"


INFINITY = Slope(1, 0)


def parse_slope(text: str) -> Slope:
    """Parse "p/q", a bare integer, or "inf"."""
    text = text.strip()
    if text == "inf":
        return INFINITY
    try:
        if "/" in text:
            num, den = text.split("/")
            return Slope(int(num), int(den))
        return Slope(int(text))
    except (ValueError, FareyError) as exc:
        raise FareyError(f"cannot parse slope {text!r}") from exc


def intersection_number(a: Slope, b: Slope) -> int:
    """Geometric intersection number |p*s - q*r| of the slopes p/q and r/s.

    Symmetric; zero exactly when the slopes coincide.
    """
    return abs(a.numerator * b.denominator - a.denominator * b.numerator)


def is_edge(a: Slope, b: Slope) -> bool:
    """Whether a and b are joined by an edge of the Farey tessellation."""
    return intersection_number(a, b) == 1


def successor(b: Slope) -> Slope:
    """The greatest rational b' = p'/q' with p'*q - p*q' = 1.

    Equivalently, the neighbor of b closest to +infinity on (b, +inf).  The
    minimal positive q' in the solution fan maximizes the value; it is found
    with a modular inverse, so q' <= q always.
    """
    if b.is_infinite:
        raise FareyError("successor is undefined at infinity")
    p, q = b.numerator, b.denominator
    if q == 1:
        return Slope(p + 1, 1)
    qq = (-pow(p % q, -1, q)) % q
    pp = (1 + p * qq) // q
    return Slope(pp, qq)


def _fan(b: Slope, t: int) -> Slope:
    """The t-th upper neighbor of b: successor for t = 0, decreasing to b."""
    s = successor(b)
    return Slope(s.numerator + t * b.numerator, s.denominator + t * b.denominator)


def greatest_neighbor_below(a: Slope, upper: Slope) -> Slope:
    """The maximal slope in the open interval (a, upper) with an edge to a.

    The upper neighbors of a form a fan accumulating at a from above, so for
    any upper > a the interval always contains neighbors; errors can only
    signal a violated precondition (a infinite, or a >= upper).
    """
    if a.is_infinite:
        raise FareyError("infinity has no neighbors from above")
    if not a < upper:
        raise FareyError(f"empty interval: {a} >= {upper}")
    s = successor(a)
    if upper.is_infinite:
        return s
    # fan(t) < upper  <=>  t > (v*p' - u*q') / (u*q - v*p), fan(0) = successor
    p, q = a.numerator, a.denominator
    u, v = upper.numerator, upper.denominator
    t = (v * s.numerator - u * s.denominator) // (u * q - v * p) + 1
    return _fan(a, max(t, 0))


@dataclass(frozen=True)
class FareyPath:
    """A strictly increasing edge path in the Farey tessellation.

    Consecutive vertices span edges, values strictly increase, and infinity
    may appear only as the final vertex.
    """

    vertices: tuple[Slope, ...]

    def __post_init__(self) -> None:
        vertices = tuple(self.vertices)
        object.__setattr__(self, "vertices", vertices)
        if not vertices:
            raise FareyError("empty path")
        for i, (x, y) in enumerate(zip(vertices, vertices[1:])):
            if not x < y:
                raise FareyError(f"path not increasing at position {i}: {x} -> {y}")
            if not is_edge(x, y):
                raise FareyError(f"consecutive vertices {x}, {y} span no edge")

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    def __str__(self) -> str:
        return ", ".join(str(v) for v in self.vertices)


def parse_path(text: str) -> FareyPath:
    return FareyPath(tuple(parse_slope(part) for part in text.split(",")))


def shortest_increasing_path(start: Slope, to: Slope) -> FareyPath:
    """The shortest strictly increasing edge path from start to to.

    Greedy on the largest admissible neighbor.  Any increasing path from a
    vertex below the edge (x, y*) to a vertex above it must pass through y*
    (Farey edges do not cross), so taking y* = the greatest neighbor of x
    not exceeding the target never lengthens the path; this is the
    continued-fraction expansion of the target relative to the start.
    """
    if not start < to:
        raise FareyError(f"path requires start < target, got {start} >= {to}")
    vertices = [start]
    x = start
    guard = intersection_number(x, to)
    while x != to:
        y = to if is_edge(x, to) else greatest_neighbor_below(x, to)
        vertices.append(y)
        x = y
        step = intersection_number(x, to)
        if x != to and step >= guard:
            raise RuntimeError("path search failed to make progress")
        guard = step
    return FareyPath(tuple(vertices))


def mediant(a: Slope, b: Slope) -> Slope:
    """Farey subdivision (p+r)/(q+s) of the edge pair a = p/q, b = r/s.

    Defined only on edge pairs; then the mediant has an edge to both inputs
    and lies strictly between them.
    """
    if not is_edge(a, b):
        raise FareyError(f"mediant requires an edge pair, got {a}, {b}")
    return Slope(a.numerator + b.numerator, a.denominator + b.denominator)


@dataclass(frozen=True)
class OpenInterval:
    """The ordinary open interval (lower, upper) of slopes."""

    lower: Slope
    upper: Slope

    def __post_init__(self) -> None:
        if not self.lower < self.upper:
            raise FareyError(f"degenerate interval ({self.lower}, {self.upper})")

    def __contains__(self, x: Slope) -> bool:
        return self.lower < x < self.upper

    def __str__(self) -> str:
        return f"({self.lower}, {self.upper})"


@dataclass(frozen=True)
class WrappedInterval:
    """An interval wrapping through infinity: (lower, inf] union [-inf, upper).

    Arises when the nominal endpoints satisfy upper < lower; membership
    reduces to the two ordinary one-sided queries.
    """

    lower: Slope
    upper: Slope

    def __post_init__(self) -> None:
        if not self.upper < self.lower:
            raise FareyError(
                f"wrapped interval requires upper < lower, got ({self.lower}, {self.upper})"
            )

    def __contains__(self, x: Slope) -> bool:
        return x > self.lower or x < self.upper

    def __str__(self) -> str:
        return f"({self.lower}, inf] u [-inf, {self.upper})"


def slope_interval(lower: Slope, upper: Slope) -> OpenInterval | WrappedInterval:
    """The interval from lower to upper, wrapping through infinity if needed."""
    if lower < upper:
        return OpenInterval(lower, upper)
    return WrappedInterval(lower, upper)
