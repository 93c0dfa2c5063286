"""Rows, certified first appearances, path bounds and power-map graphs."""

from ._core import (
    CertificationError,
    InvalidDownStep,
    Params,
    ResourceLimitError,
    belt_endpoint_bound,
    certified_cutoff,
    check_uudd_infeasible,
    classify_prime,
    connecting_path,
    count_components,
    decompose,
    evaluate_path,
    first_appearances,
    generate_rows,
    howmax_bound,
    is_maximal,
    path_max_bound,
    to_dot,
)

__all__ = [
    "CertificationError",
    "InvalidDownStep",
    "Params",
    "ResourceLimitError",
    "belt_endpoint_bound",
    "certified_cutoff",
    "check_uudd_infeasible",
    "classify_prime",
    "connecting_path",
    "count_components",
    "decompose",
    "evaluate_path",
    "first_appearances",
    "generate_rows",
    "howmax_bound",
    "is_maximal",
    "path_max_bound",
    "to_dot",
]
