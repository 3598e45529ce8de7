import math

import pytest

from src.core.exceptions import CapacityError, ContractViolationError
from src.exact.stirling import build_stirling


def test_small_rows():
    tri = build_stirling(4)
    assert tri.row(0) == (1,)
    assert tri.row(3) == (0, 2, 3, 1)
    assert tri.row(4) == (0, 6, 11, 6, 1)


def test_rows_sum_to_factorial():
    tri = build_stirling(30)
    for n in range(31):
        assert sum(tri.row(n)) == math.factorial(n)


def test_verify_accepts_built_triangle():
    build_stirling(60).verify()


def test_entry_outside_triangle_is_zero():
    tri = build_stirling(5)
    assert tri.entry(3, 4) == 0
    assert tri.entry(3, -1) == 0


def test_capacity_bound():
    with pytest.raises(CapacityError):
        build_stirling(300)
    assert build_stirling(300, bound=300).n_max == 300


def test_negative_size_is_a_contract_violation():
    with pytest.raises(ContractViolationError):
        build_stirling(-1)
