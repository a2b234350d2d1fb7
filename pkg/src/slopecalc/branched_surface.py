"""Combinatorial branched surfaces with integer weight systems.

A branched surface is stored as its sector set plus the branch curves of the
branch locus; each branch curve names the two sectors whose branching
direction is outward and the one sector whose branching direction is inward.
A weight function assigns an integer to every sector and is valid when the
branch equation w(out1) + w(out2) = w(in) holds along every branch curve.
Valid weights form a cone: the zero weight is valid, and validity is closed
under pointwise addition and nonnegative integer scaling.

Per-sector Euler data is input, not computed: the carried-surface Euler
characteristic is the linear functional sum(w(B) * cusped_euler(B)).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, replace

ROLES = ("out1", "out2", "in")
BOUNDARY_CLASSES = ("essential", "disk-bounding")


@dataclass(frozen=True)
class SectorRecord:
    """A sector: one connected component of the surface minus the branch locus."""

    id: str
    cusped_euler: int = 0
    boundary: bool = False


@dataclass(frozen=True)
class BranchCurve:
    """One branch-locus component, oriented by its branching direction.

    The branch equation along the curve reads w(out1) + w(out2) = w(inward).
    The three sector ids need not be distinct.
    """

    out1: str
    out2: str
    inward: str


@dataclass(frozen=True)
class BoundaryCurve:
    """A surviving sector incidence left behind when a branch curve is deleted."""

    sector: str
    role: str

    def __post_init__(self) -> None:
        if self.role not in ROLES:
            raise ValueError(f"unknown incidence role {self.role!r}")


@dataclass(frozen=True)
class VerticalAnnulus:
    """Degree and boundary-class bookkeeping for one vertical boundary annulus."""

    id: str
    degree: int
    boundary_classes: tuple[str, str]

    def __post_init__(self) -> None:
        if self.degree < 0:
            raise ValueError(f"annulus {self.id}: negative degree {self.degree}")
        object.__setattr__(self, "boundary_classes", tuple(self.boundary_classes))
        for tag in self.boundary_classes:
            if tag not in BOUNDARY_CLASSES:
                raise ValueError(f"annulus {self.id}: unknown boundary class {tag!r}")


@dataclass(frozen=True)
class BranchedSurface:
    sectors: tuple[SectorRecord, ...] = ()
    branch_curves: tuple[BranchCurve, ...] = ()
    boundary_curves: tuple[BoundaryCurve, ...] = ()
    vertical_annuli: tuple[VerticalAnnulus, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "sectors", tuple(self.sectors))
        object.__setattr__(self, "branch_curves", tuple(self.branch_curves))
        object.__setattr__(self, "boundary_curves", tuple(self.boundary_curves))
        object.__setattr__(self, "vertical_annuli", tuple(self.vertical_annuli))

    def sector_ids(self) -> list[str]:
        return [s.id for s in self.sectors]

    def is_empty(self) -> bool:
        return not self.sectors


@dataclass(frozen=True)
class WeightFunction:
    """An integer assignment sector id -> Z, not bound to any one surface."""

    weights: dict[str, int]

    def __getitem__(self, sector_id: str) -> int:
        return self.weights[sector_id]

    def ids(self) -> set[str]:
        return set(self.weights)

    def __add__(self, other: WeightFunction) -> WeightFunction:
        if self.ids() != other.ids():
            raise ValueError("weight functions defined on different sector sets")
        return WeightFunction({k: v + other.weights[k] for k, v in self.weights.items()})


def validate_surface(surface: BranchedSurface) -> list[str]:
    """Structural violations of the surface data; an empty list means well formed."""
    violations = []
    ids = surface.sector_ids()
    seen: set[str] = set()
    for sid in ids:
        if sid in seen:
            violations.append(f"duplicate sector id {sid!r}")
        seen.add(sid)
    for curve in surface.branch_curves:
        for role in ROLES:
            sid = getattr(curve, "inward" if role == "in" else role)
            if sid not in seen:
                violations.append(f"branch curve references unknown sector {sid!r}")
    for bc in surface.boundary_curves:
        if bc.sector not in seen:
            violations.append(f"boundary curve references unknown sector {bc.sector!r}")
    annulus_ids: set[str] = set()
    for annulus in surface.vertical_annuli:
        if annulus.id in annulus_ids:
            violations.append(f"duplicate annulus id {annulus.id!r}")
        annulus_ids.add(annulus.id)
    return violations


def _require_domain(surface: BranchedSurface, w: WeightFunction) -> None:
    if w.ids() != set(surface.sector_ids()):
        raise ValueError("weight function domain does not match the sector set")


def check_weights(surface: BranchedSurface, w: WeightFunction) -> bool:
    """Whether w satisfies every branch equation w(out1) + w(out2) = w(in)."""
    _require_domain(surface, w)
    return all(
        w[c.out1] + w[c.out2] == w[c.inward] for c in surface.branch_curves
    )


def enumerate_weights(
    surface: BranchedSurface,
    max_weight: int,
    positivity: str = "nonnegative",
) -> list[WeightFunction]:
    """All valid weight functions with every weight in [lo, max_weight].

    lo is 0 for "nonnegative" and 1 for "positive".  Output is ordered
    lexicographically on the value tuple taken in sorted-sector-id order.
    Backtracking checks each branch equation as soon as its last sector is
    assigned; exhaustive and exact at desk scale.
    """
    if max_weight < 0:
        raise ValueError("max_weight must be nonnegative")
    if positivity not in ("nonnegative", "positive"):
        raise ValueError(f"unknown positivity {positivity!r}")
    lo = 0 if positivity == "nonnegative" else 1
    ids = sorted(set(surface.sector_ids()))
    index = {sid: i for i, sid in enumerate(ids)}
    # curves checked at the deepest sector they involve
    checks_at: list[list[BranchCurve]] = [[] for _ in ids]
    for curve in surface.branch_curves:
        last = max(index[curve.out1], index[curve.out2], index[curve.inward])
        checks_at[last].append(curve)

    solutions: list[WeightFunction] = []
    assigned: dict[str, int] = {}

    def backtrack(depth: int) -> None:
        if depth == len(ids):
            solutions.append(WeightFunction(dict(assigned)))
            return
        sid = ids[depth]
        for value in range(lo, max_weight + 1):
            assigned[sid] = value
            if all(
                assigned[c.out1] + assigned[c.out2] == assigned[c.inward]
                for c in checks_at[depth]
            ):
                backtrack(depth + 1)
        del assigned[sid]

    backtrack(0)
    return solutions


def scale_weights(w: WeightFunction, c: int) -> WeightFunction:
    """Multiply every weight by the positive integer c (c = 2 is doubling)."""
    if c < 1:
        raise ValueError("scale factor must be a positive integer")
    return WeightFunction({k: c * v for k, v in w.weights.items()})


def carried_euler(surface: BranchedSurface, w: WeightFunction) -> int:
    """Euler characteristic of the carried surface: sum of w(B) * cusped_euler(B).

    Linear in w.  Every component of a surface carried here is a torus, so a
    carrying weight must land in the kernel of this functional; the chi = 0
    filter is applied by callers.
    """
    if not check_weights(surface, w):
        raise ValueError("weight function violates the branch equations")
    return sum(w[s.id] * s.cusped_euler for s in surface.sectors)


def amputate(surface: BranchedSurface, sector_ids: set[str]) -> BranchedSurface:
    """Remove the named sectors, demoting orphaned incidences to boundary curves.

    Every branch curve touching a removed sector is deleted and each of its
    surviving incidences becomes a boundary-curve record; sectors that gain a
    boundary incidence are re-marked boundary = True (they are now candidates
    for further amputation).  Boundary records are kept sorted so that
    amputation by disjoint id sets commutes on the nose.
    """
    removed = set(sector_ids)
    if not removed:
        raise ValueError("amputation requires a nonempty sector set")
    known = set(surface.sector_ids())
    unknown = removed - known
    if unknown:
        raise ValueError(f"unknown sector ids: {sorted(unknown)}")

    kept_curves = []
    new_boundary = []
    for curve in surface.branch_curves:
        incidences = ((curve.out1, "out1"), (curve.out2, "out2"), (curve.inward, "in"))
        if all(sid not in removed for sid, _ in incidences):
            kept_curves.append(curve)
            continue
        for sid, role in incidences:
            if sid not in removed:
                new_boundary.append(BoundaryCurve(sid, role))
    boundary = [bc for bc in surface.boundary_curves if bc.sector not in removed]
    boundary.extend(new_boundary)
    boundary.sort(key=lambda bc: (bc.sector, bc.role))

    touched = {bc.sector for bc in boundary}
    sectors = tuple(
        replace(s, boundary=True) if not s.boundary and s.id in touched else s
        for s in surface.sectors
        if s.id not in removed
    )
    return BranchedSurface(
        sectors=sectors,
        branch_curves=tuple(kept_curves),
        boundary_curves=tuple(boundary),
        vertical_annuli=surface.vertical_annuli,
    )


def check_degree_consistency(records: list[VerticalAnnulus]) -> list[str]:
    """Violations of the degree dichotomy.

    Admissible records have degree 0 with both boundary components essential,
    or degree 1 with both bounding disks; anything else is flagged: degree 0
    next to a disk, degree 1 next to an essential curve, any degree >= 2, and
    mixed boundary classes.
    """
    violations = []
    for r in records:
        first, second = r.boundary_classes
        if first != second:
            violations.append(f"annulus {r.id}: mixed boundary classes ({first}, {second})")
        if r.degree == 0:
            if "disk-bounding" in r.boundary_classes:
                violations.append(f"annulus {r.id}: degree 0 with a disk-bounding boundary")
        elif r.degree == 1:
            if "essential" in r.boundary_classes:
                violations.append(f"annulus {r.id}: degree 1 with an essential boundary")
        else:
            violations.append(f"annulus {r.id}: degree {r.degree} outside the 0/1 dichotomy")
    return violations


def tangency_count(annulus: VerticalAnnulus) -> int:
    """Contact tangencies along each boundary circle: exactly 2 * degree.

    Also the upper bound for the number of Reeb components in the degree
    argument.
    """
    return 2 * annulus.degree


def is_boundary_free(surface: BranchedSurface) -> bool:
    """Whether no sector touches the boundary and no boundary curves remain."""
    return not surface.boundary_curves and not any(s.boundary for s in surface.sectors)


def is_sufficiently_positive(w: WeightFunction, threshold: int) -> bool:
    """Whether every weight strictly exceeds the threshold."""
    return all(v > threshold for v in w.weights.values())


def sup_exceeds(
    surface: BranchedSurface, weight_functions: list[WeightFunction], threshold: int
) -> bool:
    """Whether, on every sector, some supplied weight function exceeds threshold.

    Finite stand-in for an unbounded-supremum condition: the sup over the
    supplied family must exceed the threshold sector by sector.
    """
    for w in weight_functions:
        _require_domain(surface, w)
    return all(
        any(w[sid] > threshold for w in weight_functions)
        for sid in surface.sector_ids()
    )


# ---------------------------------------------------------------------------
# Serialization: JSON-compatible documents
# ---------------------------------------------------------------------------

def surface_to_dict(surface: BranchedSurface) -> dict:
    doc: dict = {
        "sectors": [
            {"id": s.id, "cusped_euler": s.cusped_euler, "boundary": s.boundary}
            for s in surface.sectors
        ],
        "branch_curves": [
            {"out1": c.out1, "out2": c.out2, "in": c.inward}
            for c in surface.branch_curves
        ],
    }
    if surface.boundary_curves:
        doc["boundary_curves"] = [
            {"sector": bc.sector, "role": bc.role} for bc in surface.boundary_curves
        ]
    if surface.vertical_annuli:
        doc["vertical_annuli"] = [
            {"id": a.id, "degree": a.degree, "boundary_classes": list(a.boundary_classes)}
            for a in surface.vertical_annuli
        ]
    return doc


def surface_from_dict(doc: dict) -> BranchedSurface:
    try:
        sectors = tuple(
            SectorRecord(
                id=str(s["id"]),
                cusped_euler=int(s.get("cusped_euler", 0)),
                boundary=bool(s.get("boundary", False)),
            )
            for s in doc.get("sectors", [])
        )
        curves = tuple(
            BranchCurve(out1=str(c["out1"]), out2=str(c["out2"]), inward=str(c["in"]))
            for c in doc.get("branch_curves", [])
        )
        boundary = tuple(
            BoundaryCurve(sector=str(b["sector"]), role=str(b["role"]))
            for b in doc.get("boundary_curves", [])
        )
        annuli = tuple(
            VerticalAnnulus(
                id=str(a["id"]),
                degree=int(a["degree"]),
                boundary_classes=tuple(str(t) for t in a["boundary_classes"]),
            )
            for a in doc.get("vertical_annuli", [])
        )
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed surface document: {exc}") from exc
    return BranchedSurface(sectors, curves, boundary, annuli)


def load_surface(path: str) -> BranchedSurface:
    """Read and structurally parse a surface document (no validation)."""
    with open(path, encoding="utf-8") as handle:
        return surface_from_dict(json.load(handle))


def weights_to_dict(w: WeightFunction) -> dict[str, int]:
    return dict(sorted(w.weights.items()))


def weights_from_dict(doc: dict) -> WeightFunction:
    return WeightFunction({str(k): int(v) for k, v in doc.items()})
