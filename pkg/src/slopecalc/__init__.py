"""Exact combinatorial calculator: Farey slopes, branched-surface weight
systems, small-Seifert slope analysis, and multicurves on the 3-punctured
sphere.  All arithmetic is arbitrary-precision integer or rational; nothing
here touches floating point.
"""

from .branched_surface import (
    BoundaryCurve,
    BranchCurve,
    BranchedSurface,
    SectorRecord,
    VerticalAnnulus,
    WeightFunction,
    amputate,
    carried_euler,
    check_degree_consistency,
    check_weights,
    enumerate_weights,
    is_boundary_free,
    is_sufficiently_positive,
    scale_weights,
    sup_exceeds,
    tangency_count,
    validate_surface,
)
from .farey import (
    INFINITY,
    FareyError,
    FareyPath,
    OpenInterval,
    Slope,
    WrappedInterval,
    greatest_neighbor_below,
    intersection_number,
    is_edge,
    mediant,
    parse_slope,
    shortest_increasing_path,
    slope_interval,
    successor,
)
from .multicurve import (
    BoundaryData,
    MulticurveCoordinates,
    count_multicurves,
    enumerate_multicurves,
    is_tight_candidate,
)
from .seifert import (
    AnalysisReport,
    ConventionInfeasible,
    GcsFamily,
    InadmissibleK,
    KEvidence,
    LensSpaceDegeneration,
    NormalizationError,
    SeifertTriple,
    analyze,
    check_edge_to_sk,
    check_rel_prime,
    dual_invariants,
    euler_number,
    gcs_determinant,
    gcs_family,
    is_torus_bundle,
    limit_slope,
    normalize,
    parse_triple,
    slope_sk,
    slope_sk_unreduced,
)

__version__ = "0.1.0"
