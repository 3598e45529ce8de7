"""Precision contexts and exact/decimal conversions for the numerical oracle."""

from __future__ import annotations

from fractions import Fraction
from typing import TypeAlias, Union

import mpmath
from mpmath import libmp
from mpmath.ctx_mp_python import _mpf

from src.core.exceptions import DomainError
from src.exact.factorials import RationalLike, as_rational

# Each private context derives its own mpf class from this base.
BigFloat: TypeAlias = _mpf

MIN_PRECISION = 64


def working_context(precision: int, guard_bits: int = 32) -> mpmath.MPContext:
    """A private mpmath context at precision + guard_bits bits."""
    if isinstance(precision, bool) or not isinstance(precision, int) or precision < MIN_PRECISION:
        raise DomainError(f"precision must be an int >= {MIN_PRECISION} bits, got {precision!r}")
    ctx = mpmath.MPContext()
    ctx.prec = precision + guard_bits
    return ctx


def to_mpf(ctx: mpmath.MPContext, value: Union[RationalLike, BigFloat]) -> BigFloat:
    """Convert an exact rational (or an mpf from another context) at ctx precision."""
    if isinstance(value, BigFloat):
        return ctx.mpf(value)
    exact = as_rational(value)
    return ctx.mpf(exact.numerator) / exact.denominator


def parse_tolerance(value: Union[RationalLike, BigFloat]) -> Fraction:
    """Tolerances are exact decimal strings or rationals; they must be positive."""
    if isinstance(value, BigFloat):
        exact = mpf_to_fraction(value)
    else:
        exact = as_rational(value)
    if exact <= 0:
        raise DomainError(f"tolerance must be positive, got {value}")
    return exact


def format_mpf(value: BigFloat, digits: int = 30) -> str:
    """Deterministic decimal rendering of an mpf with `digits` significant digits."""
    return libmp.to_str(value._mpf_, digits)


def format_rational(value: RationalLike, digits: int = 30) -> str:
    """Decimal rendering of an exact rational, correctly rounded at `digits` digits."""
    exact = as_rational(value)
    bits = int(digits * 3.33) + 16
    ctx = mpmath.MPContext()
    ctx.prec = bits
    return format_mpf(to_mpf(ctx, exact), digits)


def bits_to_digits(precision: int) -> int:
    return max(1, int(precision * 0.30103))


def mpf_to_fraction(value: BigFloat) -> Fraction:
    """The exact dyadic rational held by a finite mpf."""
    sign, man, exp, _ = value._mpf_
    if not man and exp:
        raise DomainError(f"{value} is not finite")
    exact = Fraction(man) * Fraction(2) ** exp
    return -exact if sign else exact
