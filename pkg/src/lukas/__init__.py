"""Enumeration of pattern-position equivalence classes of Łukasiewicz paths."""

from .paths import (
    DYCK,
    LUKASIEWICZ,
    MOTZKIN,
    Path,
    enumerate_paths,
    format_path,
    heights,
    in_subset,
    is_valid,
    parse_path,
    validate,
)
from .patterns import RELATIONS, equivalent, occurrences, signature_bundle
from .quotient import (
    ClassCount,
    class_counts_all,
    count_classes_oracle,
    count_valid_position_sets,
    oracle_bound,
)
from .series import (
    Series,
    available_methods,
    expand_closed,
    expand_recurrence,
    family_series,
    sequence_values,
    solve_fixpoint,
)

__all__ = [
    "DYCK",
    "LUKASIEWICZ",
    "MOTZKIN",
    "Path",
    "RELATIONS",
    "ClassCount",
    "Series",
    "available_methods",
    "class_counts_all",
    "count_classes_oracle",
    "count_valid_position_sets",
    "enumerate_paths",
    "equivalent",
    "expand_closed",
    "expand_recurrence",
    "family_series",
    "format_path",
    "heights",
    "in_subset",
    "is_valid",
    "occurrences",
    "oracle_bound",
    "parse_path",
    "sequence_values",
    "signature_bundle",
    "solve_fixpoint",
    "validate",
]
