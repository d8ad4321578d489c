"""Exact complementary tension-flow polynomials of multigraphs.

The package computes, in exact arithmetic, the modular/integral
complementary polynomials and their closed-box duals alongside the Tutte,
rank-generating, tension, and flow polynomials, and mechanically verifies
the identities relating them (decomposition, reciprocity, specialization,
convolution, integral-modular relations) on small graphs.
"""

from .counting import (
    BudgetExceededError,
    CountQuery,
    CyclicProduct,
    FAMILIES,
    InternalCheckError,
    TensionFlowPair,
    count,
    enum_integer_flows_box,
    enum_integer_tensions_box,
    enum_modular_flows,
    enum_modular_tensions,
    mod_map,
    reorient_p,
    reorient_q,
)
from .multigraph import (
    ForestData,
    GraphFormatError,
    GraphStats,
    MultiGraph,
    build_graph,
    format_graph_text,
    parse_graph_text,
    spanning_structure,
)
from .orientations import (
    ClassPartition,
    EnumerationLimitError,
    MintyPartition,
    Orientation,
    OrientationClassification,
    boundary,
    classify,
    coupling,
    enumerate_classes,
    enumerate_orientations,
    equivalent,
    incidence_sign,
    indicator,
    induced_orientation,
    is_flow,
    is_tension,
    minty_partition,
)
from .polynomials import (
    BivariatePolynomial,
    InterpolationError,
    PolynomialReport,
    counting_polynomial,
    interpolate,
    local_polynomial,
    polynomial_report,
    rank_generating,
    tutte,
)
from .verify import (
    IdentityCheck,
    IdentityReport,
    small_multigraphs,
    verify_corpus,
    verify_graph,
)

__all__ = [
    "BivariatePolynomial",
    "BudgetExceededError",
    "ClassPartition",
    "CountQuery",
    "CyclicProduct",
    "EnumerationLimitError",
    "FAMILIES",
    "ForestData",
    "GraphFormatError",
    "GraphStats",
    "IdentityCheck",
    "IdentityReport",
    "InternalCheckError",
    "InterpolationError",
    "MintyPartition",
    "MultiGraph",
    "Orientation",
    "OrientationClassification",
    "PolynomialReport",
    "TensionFlowPair",
    "boundary",
    "build_graph",
    "classify",
    "count",
    "counting_polynomial",
    "coupling",
    "enum_integer_flows_box",
    "enum_integer_tensions_box",
    "enum_modular_flows",
    "enum_modular_tensions",
    "enumerate_classes",
    "enumerate_orientations",
    "equivalent",
    "format_graph_text",
    "incidence_sign",
    "indicator",
    "induced_orientation",
    "interpolate",
    "is_flow",
    "is_tension",
    "local_polynomial",
    "minty_partition",
    "mod_map",
    "parse_graph_text",
    "polynomial_report",
    "rank_generating",
    "reorient_p",
    "reorient_q",
    "small_multigraphs",
    "spanning_structure",
    "tutte",
    "verify_corpus",
    "verify_graph",
]

__version__ = "0.1.0"
