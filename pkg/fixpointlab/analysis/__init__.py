from .classify import (
    FixedPointClass,
    FixedPointRecord,
    Line,
    BoundReport,
    classify,
    classify_multiplier,
    max_collinear_attractive,
    check_half_bound,
    conjecture_margin,
    margin_of,
)
from .identities import (
    QuadraticIdentity,
    CubicDecomposition,
    quadratic_identity_check,
    cubic_decomposition,
    cubic_decomposition_of,
    identity_check,
)
from .search import (
    SearchConfig,
    SearchReport,
    VIOLATION_THRESHOLD,
    conjecture_search,
)
from .sweep import (
    SweepConfig,
    SweepReport,
    sweep_half_bound,
    sweep_corpus,
)

__all__ = [
    "FixedPointClass",
    "FixedPointRecord",
    "Line",
    "BoundReport",
    "classify",
    "classify_multiplier",
    "max_collinear_attractive",
    "check_half_bound",
    "conjecture_margin",
    "margin_of",
    "QuadraticIdentity",
    "CubicDecomposition",
    "quadratic_identity_check",
    "cubic_decomposition",
    "cubic_decomposition_of",
    "identity_check",
    "SearchConfig",
    "SearchReport",
    "VIOLATION_THRESHOLD",
    "conjecture_search",
    "SweepConfig",
    "SweepReport",
    "sweep_half_bound",
    "sweep_corpus",
]
