"""Slope analysis for Seifert fibered spaces over S^2 with three singular fibers.

The invariants are an ordered triple (b1/a1, b2/a2, b3/a3) of slopes with
positive denominators.  After normalization (0 < b1/a1, b2/a2 < 1 and
-2 < b3/a3 < 0) the analysis computes, in exact arithmetic:

  - the Euler number e = sum of the invariants,
  - the dual invariants b_i'/a_i' (the Farey successor of each meridian),
  - the one-parameter solution family of k1*a1 + a1' = k2*a2 + a2', stepping
    by 1/gcd(a1, a2) from a particular solution with r1 minimal nonnegative,
  - the boundary slope s_k for each admissible k, presented as the unreduced
    integer pair so that the determinant against (a3, b3) and the coprimality
    of the pair are meaningful,
  - the limit slope s = -b1/a1 - b2/a2 the s_k descend to,
  - the torus-bundle test sum 1/a_i = 1, equivalently
    (a1*a2 - a1 - a2) * a3 = a1*a2.

For e = 0 the determinant is a constant D and s_k - s = D / (a3 * den(s_k));
for e != 0 it moves by -a1*a2*a3*e per unit of k, so edges and coprimality
eventually fail and only finitely many candidate slopes survive.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .farey import (
    Slope,
    WrappedInterval,
    is_edge,
    parse_slope,
    slope_interval,
    successor,
)

VERDICT_FINITE = "GCS finite"
VERDICT_TORUS_BUNDLE = "torus-bundle candidate"
VERDICT_EDGE_FAILS = "edge condition fails for large k"

CASE2_NOTE = "Case-2 assumption violated (zero-twisting torus exists)"
EMPTY_FAMILY_NOTE = (
    "no admissible (k1, k2) pairs: gcd(a1, a2) does not divide a2' - a1'"
)


class NormalizationError(ValueError):
    """The triple cannot be brought to the normalization convention."""


class LensSpaceDegeneration(NormalizationError):
    """Some multiplicity a_i is 1: a lens-space degeneration, not analyzed here."""


class ConventionInfeasible(NormalizationError):
    """Shifting leaves b3/a3 outside (-2, 0); carries the offending slope."""

    def __init__(self, offending: Slope):
        self.offending = offending
        super().__init__(f"normalized b3/a3 = {offending} falls outside (-2, 0)")


class InadmissibleK(ValueError):
    """k is negative, off the step lattice, or yields non-integer k1, k2."""


@dataclass(frozen=True)
class SeifertTriple:
    """Ordered Seifert invariants (b1/a1, b2/a2, b3/a3), all finite."""

    invariants: tuple[Slope, Slope, Slope]

    def __post_init__(self) -> None:
        invariants = tuple(self.invariants)
        object.__setattr__(self, "invariants", invariants)
        if len(invariants) != 3:
            raise ValueError("a Seifert triple has exactly three invariants")
        for slope in invariants:
            if slope.is_infinite:
                raise ValueError("Seifert invariants must be finite slopes")

    @property
    def alphas(self) -> tuple[int, int, int]:
        return tuple(s.denominator for s in self.invariants)

    @property
    def betas(self) -> tuple[int, int, int]:
        return tuple(s.numerator for s in self.invariants)

    def is_normalized(self) -> bool:
        """0 < b1/a1 < 1, 0 < b2/a2 < 1 and -2 < b3/a3 < 0."""
        one = Slope(1)
        zero = Slope(0)
        minus_two = Slope(-2)
        s1, s2, s3 = self.invariants
        return zero < s1 < one and zero < s2 < one and minus_two < s3 < zero

    def __str__(self) -> str:
        return "(" + ", ".join(str(s) for s in self.invariants) + ")"


def parse_triple(text: str) -> SeifertTriple:
    """Parse "(b1/a1, b2/a2, b3/a3)"; spaces optional."""
    stripped = text.strip()
    if stripped.startswith("(") and stripped.endswith(")"):
        stripped = stripped[1:-1]
    parts = stripped.split(",")
    if len(parts) != 3:
        raise ValueError(f"cannot parse Seifert triple {text!r}")
    return SeifertTriple(tuple(parse_slope(p) for p in parts))


def euler_number(t: SeifertTriple) -> Fraction:
    """The exact rational e = b1/a1 + b2/a2 + b3/a3."""
    return sum((s.as_fraction() for s in t.invariants), Fraction(0))


def normalize(t: SeifertTriple) -> SeifertTriple:
    """Shift b1, b2 into (0, a_i), compensating through b3; e is preserved.

    Requires three genuine singular fibers (all a_i >= 2); errors if the
    compensated b3/a3 escapes (-2, 0).
    """
    if any(a < 2 for a in t.alphas):
        raise LensSpaceDegeneration(
            f"lens-space degeneration: multiplicities {t.alphas} include 1"
        )
    s1, s2, s3 = t.invariants
    shift = s1.numerator // s1.denominator + s2.numerator // s2.denominator
    r1 = Slope(s1.numerator % s1.denominator, s1.denominator)
    r2 = Slope(s2.numerator % s2.denominator, s2.denominator)
    r3 = Slope(s3.numerator + shift * s3.denominator, s3.denominator)
    result = SeifertTriple((r1, r2, r3))
    if not result.is_normalized():
        raise ConventionInfeasible(r3)
    return result


def dual_invariants(t: SeifertTriple) -> tuple[Slope, Slope]:
    """The pair (successor(b1/a1), successor(b2/a2)) for a normalized triple."""
    if not t.is_normalized():
        raise ValueError(f"dual invariants require a normalized triple, got {t}")
    return successor(t.invariants[0]), successor(t.invariants[1])


@dataclass(frozen=True)
class GcsFamily:
    """The solution family of k1*a1 + a1' = k2*a2 + a2'.

    k runs over nonnegative multiples of step = 1/gcd(a1, a2), with
    k1 = k*a2 + r1 and k2 = k*a1 + r2 from the particular solution (r1, r2),
    r1 minimal nonnegative.
    """

    base: SeifertTriple
    duals: tuple[Slope, Slope]
    r1: int
    r2: int
    step: Fraction


def gcs_family(t: SeifertTriple) -> GcsFamily | None:
    """The family for a normalized triple, or None when no solution exists.

    None means gcd(a1, a2) does not divide a2' - a1', so there are no
    (k1, k2) pairs at all and the infinite-family mechanism cannot arise.
    """
    d1, d2 = dual_invariants(t)
    a1, a2, _ = t.alphas
    ap1, ap2 = d1.denominator, d2.denominator
    g = gcd(a1, a2)
    diff = ap2 - ap1
    if diff % g:
        return None
    # a1 * r1 = diff (mod a2); minimal nonnegative r1 via inverse mod a2/g
    m = a2 // g
    r1 = (pow((a1 // g) % m, -1, m) * (diff // g)) % m if m > 1 else 0
    value = r1 * a1 + ap1 - ap2
    # value is a multiple of a2 in (-a2, ...), hence nonnegative
    r2 = value // a2
    if value % a2 or r2 < 0:
        raise AssertionError("particular solution construction failed")
    return GcsFamily(base=t, duals=(d1, d2), r1=r1, r2=r2, step=Fraction(1, g))


def admissible_pair(family: GcsFamily, k: Fraction | int) -> tuple[int, int]:
    """The integers (k1, k2) for an admissible k; raises InadmissibleK otherwise."""
    k = Fraction(k)
    if k < 0 or (k / family.step).denominator != 1:
        raise InadmissibleK(f"k = {k} is not a nonnegative multiple of {family.step}")
    a1, a2, _ = family.base.alphas
    k1 = k * a2 + family.r1
    k2 = k * a1 + family.r2
    if k1.denominator != 1 or k2.denominator != 1:
        raise InadmissibleK(f"k = {k} yields non-integer (k1, k2) = ({k1}, {k2})")
    return int(k1), int(k2)


def slope_sk_unreduced(family: GcsFamily, k: Fraction | int) -> tuple[int, int]:
    """The boundary slope at k as the unreduced pair (numerator, denominator).

    Both displayed presentations are computed and must agree: the direct form
    (1 - (k1*b1 + b1') - (k2*b2 + b2')) / (k1*a1 + a1') and the k-expanded
    form, whose denominator must also match k2*a2 + a2'.  Determinant and
    coprimality checks are made on this pair, not on the reduced fraction.
    """
    k1, k2 = admissible_pair(family, k)
    k = Fraction(k)
    (b1, a1), (b2, a2) = (
        (s.numerator, s.denominator) for s in family.base.invariants[:2]
    )
    (bp1, ap1), (bp2, ap2) = (
        (s.numerator, s.denominator) for s in family.duals
    )
    num = 1 - (k1 * b1 + bp1) - (k2 * b2 + bp2)
    den = k1 * a1 + ap1
    expanded_num = k * (-a2 * b1 - a1 * b2) + (1 - family.r1 * b1 - bp1 - family.r2 * b2 - bp2)
    expanded_den = k * (a1 * a2) + family.r1 * a1 + ap1
    if expanded_num != num or expanded_den != den:
        raise AssertionError(f"s_k presentations disagree at k = {k}")
    if den != k2 * a2 + ap2:
        raise AssertionError(f"s_k denominators disagree at k = {k}")
    return num, den


def slope_sk(family: GcsFamily, k: Fraction | int) -> Slope:
    """The boundary slope s_k in lowest terms."""
    num, den = slope_sk_unreduced(family, k)
    return Slope(num, den)


def limit_slope(t: SeifertTriple) -> Slope:
    """The slope s = -b1/a1 - b2/a2 the s_k tend to; equals b3/a3 when e = 0."""
    if not t.is_normalized():
        raise ValueError(f"limit slope requires a normalized triple, got {t}")
    s1, s2 = t.invariants[0], t.invariants[1]
    return Slope.from_fraction(-s1.as_fraction() - s2.as_fraction())


def gcs_determinant(family: GcsFamily, k: Fraction | int) -> int:
    """det of (a3, b3) against the unreduced s_k pair: a3*num - b3*den.

    Constant in k exactly when e = 0; otherwise moves by -a1*a2*a3*e per unit
    of k.
    """
    num, den = slope_sk_unreduced(family, k)
    s3 = family.base.invariants[2]
    return s3.denominator * num - s3.numerator * den


def check_rel_prime(family: GcsFamily, k: Fraction | int) -> bool:
    """Whether the unreduced s_k numerator and denominator are coprime.

    Forced whenever |gcs_determinant| = 1, since a common factor would divide
    the determinant.
    """
    num, den = slope_sk_unreduced(family, k)
    return gcd(abs(num), den) == 1


def check_edge_to_sk(family: GcsFamily, k: Fraction | int) -> bool:
    """Whether s_k > b3/a3 and the two span a Farey edge."""
    sk = slope_sk(family, k)
    s3 = family.base.invariants[2]
    return s3 < sk and is_edge(s3, sk)


def is_torus_bundle(t: SeifertTriple) -> bool:
    """Whether sum 1/a_i = 1, the elliptic-torus-bundle condition.

    When it holds, the equivalent identity (a1*a2 - a1 - a2) * a3 = a1*a2 is
    asserted as a consistency check.
    """
    a1, a2, a3 = t.alphas
    if min(a1, a2, a3) < 2:
        raise LensSpaceDegeneration(
            f"torus-bundle test requires multiplicities >= 2, got {t.alphas}"
        )
    bundle = Fraction(1, a1) + Fraction(1, a2) + Fraction(1, a3) == 1
    if bundle:
        assert (a1 * a2 - a1 - a2) * a3 == a1 * a2
    return bundle


@dataclass(frozen=True)
class KEvidence:
    """One audited row of the analysis: the checks at a single admissible k."""

    k: Fraction
    k1: int
    k2: int
    s_k: Slope
    determinant: int
    edge: bool
    coprime: bool


@dataclass(frozen=True)
class AnalysisReport:
    triple: SeifertTriple
    normalized: SeifertTriple
    euler: Fraction
    torus_bundle: bool
    limit: Slope
    family: GcsFamily | None
    rows: tuple[KEvidence, ...]
    verdict: str
    note: str | None = None


def analyze(t: SeifertTriple, k_max: Fraction | int) -> AnalysisReport:
    """Full slope analysis of a normalizable triple up to k = k_max.

    For every admissible k <= k_max the report carries s_k, the determinant,
    the edge check and the coprimality check; the verdict separates e != 0
    (finite), e = 0 with sum 1/a_i = 1 (torus-bundle candidate), and e = 0
    otherwise (edge condition must eventually fail).
    """
    k_max = Fraction(k_max)
    normalized = normalize(t)
    e = euler_number(normalized)
    bundle = is_torus_bundle(normalized)
    limit = limit_slope(normalized)
    s3 = normalized.invariants[2]
    family = gcs_family(normalized)

    rows = []
    if family is not None:
        k = Fraction(0)
        while k <= k_max:
            num, den = slope_sk_unreduced(family, k)
            k1, k2 = admissible_pair(family, k)
            det = family.base.invariants[2].denominator * num - family.base.invariants[2].numerator * den
            sk = Slope(num, den)
            rows.append(
                KEvidence(
                    k=k,
                    k1=k1,
                    k2=k2,
                    s_k=sk,
                    determinant=det,
                    edge=s3 < sk and is_edge(s3, sk),
                    coprime=gcd(abs(num), den) == 1,
                )
            )
            if e == 0:
                # descent identity: s_k - s = D / (a3 * den(s_k)), unreduced den
                drop = sk.as_fraction() - limit.as_fraction()
                if drop != Fraction(det, s3.denominator * den):
                    raise AssertionError(f"descent identity fails at k = {k}")
            k += family.step

    note = None
    if family is None:
        verdict = VERDICT_FINITE
        note = EMPTY_FAMILY_NOTE
    elif e != 0:
        verdict = VERDICT_FINITE
        if limit != s3 and isinstance(slope_interval(s3, limit), WrappedInterval):
            note = CASE2_NOTE
    elif bundle:
        verdict = VERDICT_TORUS_BUNDLE
    else:
        verdict = VERDICT_EDGE_FAILS

    return AnalysisReport(
        triple=t,
        normalized=normalized,
        euler=e,
        torus_bundle=bundle,
        limit=limit,
        family=family,
        rows=tuple(rows),
        verdict=verdict,
        note=note,
    )


def report_to_dict(report: AnalysisReport) -> dict:
    """JSON-compatible rendering of an analysis report."""
    doc: dict = {
        "triple": str(report.triple),
        "normalized": str(report.normalized),
        "euler": str(report.euler),
        "torus_bundle": report.torus_bundle,
        "limit": str(report.limit),
        "verdict": report.verdict,
        "rows": [
            {
                "k": str(row.k),
                "k1": row.k1,
                "k2": row.k2,
                "s_k": str(row.s_k),
                "determinant": row.determinant,
                "edge": row.edge,
                "coprime": row.coprime,
            }
            for row in report.rows
        ],
    }
    if report.family is not None:
        doc["duals"] = [str(d) for d in report.family.duals]
        doc["r1"] = report.family.r1
        doc["r2"] = report.family.r2
        doc["step"] = str(report.family.step)
    if report.note is not None:
        doc["note"] = report.note
    return doc
