from .enumerate import DEFAULT_CAP, HARD_CAP, KNOWN_COUNTS, EnumerationCapError, all_graphs, enumerate_graphs, generate
from .extremal import (
    ALLOWED_SLOPES,
    BoundCheck,
    ExtremalReport,
    OracleError,
    SlopeEstimate,
    blocking_pair_search,
    bound_checks,
    brute_ex,
    brute_ex_constrained,
    brute_spex,
    build_G_family,
    chvatal_hanson_check,
    erdos_gallai_checks,
    naive_ex,
    naive_spex,
    slope_probe,
)

__all__ = [
    "DEFAULT_CAP", "HARD_CAP", "KNOWN_COUNTS", "EnumerationCapError", "all_graphs", "enumerate_graphs", "generate",
    "ALLOWED_SLOPES", "BoundCheck", "ExtremalReport", "OracleError", "SlopeEstimate", "blocking_pair_search",
    "bound_checks", "brute_ex", "brute_ex_constrained", "brute_spex", "build_G_family", "chvatal_hanson_check",
    "erdos_gallai_checks", "naive_ex", "naive_spex", "slope_probe",
]
