from fractions import Fraction

from hypothesis import given, strategies as st
import pytest

from src.core.exceptions import ContractViolationError
from src.exact.factorials import as_rational, falling_factorial, rising_factorial


def test_rising_and_falling_at_one_half():
    assert rising_factorial(Fraction(1, 2), 2) == Fraction(3, 4)
    assert falling_factorial(Fraction(1, 2), 2) == Fraction(-1, 4)


def test_order_zero_is_one():
    assert rising_factorial(7, 0) == 1
    assert falling_factorial("3/5", 0) == 1


def test_rising_factorial_of_one_is_factorial():
    assert rising_factorial(1, 6) == 720


def test_falling_factorial_vanishes_past_integer_argument():
    assert falling_factorial(3, 4) == 0


def test_negative_order_is_rejected():
    with pytest.raises(ContractViolationError):
        rising_factorial(1, -1)


def test_binary_floats_are_rejected():
    with pytest.raises(ContractViolationError):
        as_rational(0.5)


def test_exact_strings_are_parsed():
    assert as_rational("1e-3") == Fraction(1, 1000)
    assert as_rational("3/4") == Fraction(3, 4)


@given(st.fractions(min_value=-10, max_value=10, max_denominator=12), st.integers(0, 12))
def test_recurrences(x, n):
    assert rising_factorial(x, n + 1) == rising_factorial(x, n) * (x + n)
    assert falling_factorial(x, n + 1) == falling_factorial(x, n) * (x - n)
    assert falling_factorial(x, n) == (-1) ** n * rising_factorial(-x, n)
