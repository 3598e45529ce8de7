"""Majorization machinery and the product inequalities over the Cauchy table."""

from src.inequalities.continuous import check_log_convexity_at, check_thm4_at
from src.inequalities.majorization import MajorizationResult, MajPair, is_majorized, majorization_pairs
from src.inequalities.sweeps import random_chains, sweep_cor_power, sweep_thm4, sweep_thm5, sweep_thm6
from src.inequalities.theorems import (
    GhiValues,
    check_cor_power,
    check_thm4,
    check_thm4_shifted,
    check_thm5,
    check_thm6,
    compute_ghi,
)

__all__ = [
    "GhiValues",
    "MajPair",
    "MajorizationResult",
    "check_cor_power",
    "check_log_convexity_at",
    "check_thm4",
    "check_thm4_at",
    "check_thm4_shifted",
    "check_thm5",
    "check_thm6",
    "compute_ghi",
    "is_majorized",
    "majorization_pairs",
    "random_chains",
    "sweep_cor_power",
    "sweep_thm4",
    "sweep_thm5",
    "sweep_thm6",
]
