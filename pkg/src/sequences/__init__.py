"""Finite-difference analysis of the normalised Cauchy moments."""

from src.sequences.differences import (
    DiffTable,
    binomial_difference,
    build_diff_table,
    check_complete_monotonicity,
    validate_binomial,
)
from src.sequences.log_convexity import check_log_convexity, check_log_convexity_values
from src.sequences.minimality import (
    MinimalityProbe,
    WitnessEstimate,
    estimate_witness_order,
    minimality_probe,
)

__all__ = [
    "DiffTable",
    "MinimalityProbe",
    "WitnessEstimate",
    "binomial_difference",
    "build_diff_table",
    "check_complete_monotonicity",
    "check_log_convexity",
    "check_log_convexity_values",
    "estimate_witness_order",
    "minimality_probe",
    "validate_binomial",
]
