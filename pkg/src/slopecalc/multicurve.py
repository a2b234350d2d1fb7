"""Multicurves on the 3-punctured sphere with prescribed boundary endpoints.

A dividing multicurve with 2*k_i endpoints on the i-th boundary circle and no
homotopically trivial components is coded by six arc weights: n_ij arcs
joining boundary i to boundary j, and b_i boundary-parallel arcs at boundary
i.  Closed components are excluded from the model outright: every essential
closed curve here is boundary-parallel and forces overtwistedness, so the
relevant dividing sets never carry one.  Endpoint bookkeeping gives

    n12 + n13 + 2*b1 = 2*k1
    n12 + n23 + 2*b2 = 2*k2
    n13 + n23 + 2*b3 = 2*k3

and enumeration is exact integer search over that system.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class BoundaryData:
    """Half the endpoint count on each boundary circle."""

    k1: int
    k2: int
    k3: int

    def __post_init__(self) -> None:
        if min(self.k1, self.k2, self.k3) < 0:
            raise ValueError("endpoint counts must be nonnegative")

    def __str__(self) -> str:
        return f"{self.k1},{self.k2},{self.k3}"


def parse_boundary(text: str) -> BoundaryData:
    parts = text.split(",")
    if len(parts) != 3:
        raise ValueError(f"cannot parse boundary data {text!r}")
    return BoundaryData(*(int(p) for p in parts))


@dataclass(frozen=True)
class MulticurveCoordinates:
    """Arc weights of a multicurve, up to non-relative isotopy.

    Relative classes differ from these by Dehn twists along the boundary;
    that residual freedom can be pinned with the optional twist attachment,
    which enumeration never ranges over (it is infinite) and serialization
    ignores.
    """

    n12: int
    n13: int
    n23: int
    b1: int
    b2: int
    b3: int
    twists: tuple[int, int, int] | None = None

    def __post_init__(self) -> None:
        if min(self.n12, self.n13, self.n23, self.b1, self.b2, self.b3) < 0:
            raise ValueError("arc weights must be nonnegative")
        if self.twists is not None:
            object.__setattr__(self, "twists", tuple(self.twists))

    def satisfies(self, bd: BoundaryData) -> bool:
        return (
            self.n12 + self.n13 + 2 * self.b1 == 2 * bd.k1
            and self.n12 + self.n23 + 2 * self.b2 == 2 * bd.k2
            and self.n13 + self.n23 + 2 * self.b3 == 2 * bd.k3
        )

    def __str__(self) -> str:
        return f"({self.n12},{self.n13},{self.n23}|{self.b1},{self.b2},{self.b3})"


def parse_coordinates(text: str) -> MulticurveCoordinates:
    stripped = text.strip()
    if not (stripped.startswith("(") and stripped.endswith(")")) or "|" not in stripped:
        raise ValueError(f"cannot parse multicurve coordinates {text!r}")
    arcs, parallels = stripped[1:-1].split("|")
    n12, n13, n23 = (int(p) for p in arcs.split(","))
    b1, b2, b3 = (int(p) for p in parallels.split(","))
    return MulticurveCoordinates(n12, n13, n23, b1, b2, b3)


def enumerate_multicurves(
    bd: BoundaryData, allow_boundary_parallel: bool
) -> list[MulticurveCoordinates]:
    """All coordinate vectors meeting the endpoint equations, in lex order.

    With allow_boundary_parallel False the b_i are pinned to zero (the tight
    case); infeasible boundary data yields the empty list.  Lexicographic
    order on (n12, n13, n23, b1, b2, b3); since the b_i are determined by the
    n_ij, ordering the n-loops ascending suffices.
    """
    out = []
    for n12 in range(2 * min(bd.k1, bd.k2) + 1):
        for n13 in range(min(2 * bd.k1 - n12, 2 * bd.k3) + 1):
            rem1 = 2 * bd.k1 - n12 - n13
            if rem1 % 2:
                continue
            for n23 in range(min(2 * bd.k2 - n12, 2 * bd.k3 - n13) + 1):
                rem2 = 2 * bd.k2 - n12 - n23
                rem3 = 2 * bd.k3 - n13 - n23
                if rem2 % 2 or rem3 % 2:
                    continue
                b1, b2, b3 = rem1 // 2, rem2 // 2, rem3 // 2
                if not allow_boundary_parallel and (b1 or b2 or b3):
                    continue
                out.append(MulticurveCoordinates(n12, n13, n23, b1, b2, b3))
    return out


def is_tight_candidate(m: MulticurveCoordinates) -> bool:
    """No boundary-parallel arcs; the coordinate model already bars closed curves."""
    return m.b1 == 0 and m.b2 == 0 and m.b3 == 0


def count_multicurves(bd: BoundaryData, allow_boundary_parallel: bool) -> int:
    return len(enumerate_multicurves(bd, allow_boundary_parallel))
