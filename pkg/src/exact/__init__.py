"""Exact computation of Cauchy numbers of the second kind."""

from src.exact.cauchy import (
    CauchyTable,
    SeriesCoeffs,
    build_cauchy_table,
    cauchy_table,
    cauchy_table_via_stirling,
    cauchy_via_series,
    cauchy_via_stirling,
    series_coeffs,
)
from src.exact.factorials import ExactRational, falling_factorial, rising_factorial
from src.exact.stirling import StirlingTriangle, build_stirling

__all__ = [
    "CauchyTable",
    "ExactRational",
    "SeriesCoeffs",
    "StirlingTriangle",
    "build_cauchy_table",
    "cauchy_table_via_stirling",
    "build_stirling",
    "cauchy_table",
    "cauchy_via_series",
    "cauchy_via_stirling",
    "falling_factorial",
    "rising_factorial",
    "series_coeffs",
]
