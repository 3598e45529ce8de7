"""Rising and falling factorials over exact rationals."""

from __future__ import annotations

from fractions import Fraction
from typing import Union

from src.core.exceptions import ContractViolationError

# Normalised after every operation; zero is 0/1 and the denominator is positive.
ExactRational = Fraction

RationalLike = Union[Fraction, int, str]


def as_rational(value: RationalLike) -> Fraction:
    """Coerce ints, Fractions and exact strings ("3/4", "1e-12", "0.5") to a Fraction."""
    if isinstance(value, float):
        raise ContractViolationError("binary floats are not exact; pass a string or Fraction")
    return Fraction(value)


def _check_order(n: int) -> None:
    if isinstance(n, bool) or not isinstance(n, int) or n < 0:
        raise ContractViolationError(f"factorial order must be a non-negative int, got {n!r}")


def rising_factorial(x: RationalLike, n: int) -> Fraction:
    """(x)_n = x(x+1)...(x+n-1), with (x)_0 = 1."""
    _check_order(n)
    x = as_rational(x)
    result = Fraction(1)
    for i in range(n):
        result *= x + i
    return result


def falling_factorial(x: RationalLike, n: int) -> Fraction:
    """<x>_n = x(x-1)...(x-n+1), with <x>_0 = 1."""
    _check_order(n)
    x = as_rational(x)
    result = Fraction(1)
    for i in range(n):
        result *= x - i
    return result
