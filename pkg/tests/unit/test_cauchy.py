from fractions import Fraction

import pytest

from src.core.exceptions import CapacityError, ConsistencyError
from src.exact.cauchy import (
    CauchyTable,
    build_cauchy_table,
    cauchy_table_via_stirling,
    cauchy_via_series,
    series_coeffs,
)

EXPECTED_C = [
    Fraction(1),
    Fraction(1, 2),
    Fraction(5, 6),
    Fraction(9, 4),
    Fraction(251, 30),
    Fraction(475, 12),
    Fraction(19087, 84),
]
EXPECTED_MU = [Fraction(1), Fraction(1, 2), Fraction(5, 12), Fraction(3, 8), Fraction(251, 720)]


def test_regression_values():
    table = build_cauchy_table(6)
    assert list(table.c) == EXPECTED_C
    assert list(table.mu[:5]) == EXPECTED_MU


def test_series_coefficients():
    a = series_coeffs(3).a
    assert a == (Fraction(1), Fraction(1, 2), Fraction(-1, 6), Fraction(1, 12))


def test_series_route_signs():
    # b_1 = -1/2 and b_2 = 5/12 give c_1 = 1/2 and c_2 = 5/6
    table = cauchy_via_series(2)
    assert table.c[1] == Fraction(1, 2)
    assert table.c[2] == Fraction(5, 6)


def test_routes_agree_through_200(table200):
    stirling = cauchy_table_via_stirling(200)
    assert stirling.c == table200.c


def test_positive_and_increasing_from_one(table200):
    c = table200.c
    assert all(value > 0 for value in c)
    assert all(c[n + 1] > c[n] for n in range(1, 200))


def test_capacity_bound():
    with pytest.raises(CapacityError):
        build_cauchy_table(257)


def test_require_reports_short_table():
    with pytest.raises(CapacityError):
        build_cauchy_table(4).require(5)


def test_truncated_keeps_prefix(table):
    short = table.truncated(3)
    assert short.n_max == 3
    assert short.c == table.c[:4]


def test_table_rejects_inconsistent_moments():
    with pytest.raises(ConsistencyError):
        CauchyTable(c=(Fraction(1), Fraction(1, 2)), mu=(Fraction(1), Fraction(1, 3)))
