"""Cauchy numbers of the second kind by two independent exact routes.

Route (a) integrates the rising factorial term by term through the unsigned
Stirling triangle: c_n = sum_k s(n,k) / (k+1).

Route (b) inverts the Maclaurin series of (1+t) ln(1+t) / t, whose reciprocal
t / ((1+t) ln(1+t)) generates b_n = (-1)^n c_n / n!.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
import math
from typing import Optional, Sequence, Tuple

from src.core.exceptions import ConsistencyError, RouteMismatchError
from src.core.guards import CapacityGuard
from src.core.logging_config import get_logger
from src.exact.stirling import StirlingTriangle, build_stirling

logger = get_logger("exact.cauchy")


@dataclass(frozen=True)
class SeriesCoeffs:
    """a_0 = 1, a_j = (-1)^(j-1) / (j (j+1)): coefficients of (1+t) ln(1+t) / t."""

    a: Tuple[Fraction, ...]

    @property
    def n_max(self) -> int:
        return len(self.a) - 1


@dataclass(frozen=True)
class CauchyTable:
    """Exact c_0..c_N together with the normalised moments mu_n = c_n / n!."""

    c: Tuple[Fraction, ...]
    mu: Tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if len(self.c) != len(self.mu) or not self.c:
            raise ConsistencyError("c and mu must be non-empty and of equal length")
        factorial = 1
        for n, (cn, mun) in enumerate(zip(self.c, self.mu)):
            if n > 0:
                factorial *= n
            if mun * factorial != cn:
                raise ConsistencyError(f"mu[{n}] * {n}! != c[{n}]")
            if cn <= 0:
                raise ConsistencyError(f"c[{n}] = {cn} is not positive")

    @classmethod
    def from_values(cls, c: Sequence[Fraction]) -> "CauchyTable":
        mu = []
        factorial = 1
        for n, value in enumerate(c):
            if n > 0:
                factorial *= n
            mu.append(Fraction(value) / factorial)
        return cls(c=tuple(Fraction(v) for v in c), mu=tuple(mu))

    @property
    def n_max(self) -> int:
        return len(self.c) - 1

    def covers(self, n: int) -> bool:
        return 0 <= n <= self.n_max

    def require(self, n: int, *, what: str = "Cauchy table") -> None:
        CapacityGuard().validate_coverage(n, self.n_max, what=what)

    def truncated(self, n_max: int) -> "CauchyTable":
        self.require(n_max)
        return CauchyTable(c=self.c[: n_max + 1], mu=self.mu[: n_max + 1])


def series_coeffs(n_max: int) -> SeriesCoeffs:
    """Maclaurin coefficients of (1+t) ln(1+t) / t through t^n_max."""
    CapacityGuard().validate_index(n_max, what="n_max")
    coeffs = [Fraction(1)]
    for j in range(1, n_max + 1):
        sign = 1 if j % 2 == 1 else -1
        coeffs.append(Fraction(sign, j * (j + 1)))
    return SeriesCoeffs(a=tuple(coeffs))


def cauchy_via_stirling(n: int, tri: StirlingTriangle) -> Fraction:
    """c_n = integral_0^1 (x)_n dx, integrating the Stirling expansion term by term."""
    CapacityGuard().validate_coverage(n, tri.n_max, what="Stirling triangle")
    # Sum over a common denominator lcm(1..n+1) to keep the inner loop in integers.
    denominator = math.lcm(*range(1, n + 2))
    numerator = sum(s * (denominator // (k + 1)) for k, s in enumerate(tri.row(n)))
    return Fraction(numerator, denominator)


def cauchy_via_series(n_max: int, *, bound: Optional[int] = None) -> CauchyTable:
    """Solve sum_j a_j b_{n-j} = [n = 0] and return c_n = (-1)^n n! b_n."""
    CapacityGuard().validate_table_size(n_max, bound=bound, what="Cauchy table")
    a = series_coeffs(n_max).a
    b = [Fraction(1)]
    for n in range(1, n_max + 1):
        b.append(-sum((a[j] * b[n - j] for j in range(1, n + 1)), Fraction(0)))

    c = []
    factorial = 1
    for n, bn in enumerate(b):
        if n > 0:
            factorial *= n
        c.append(bn * factorial if n % 2 == 0 else -bn * factorial)
    logger.debug("Series route complete", extra={"n_max": n_max})
    return CauchyTable.from_values(c)


def cauchy_table_via_stirling(n_max: int, *, bound: Optional[int] = None) -> CauchyTable:
    tri = build_stirling(n_max, bound=bound)
    return CauchyTable.from_values([cauchy_via_stirling(n, tri) for n in range(n_max + 1)])


def build_cauchy_table(n_max: int, *, bound: Optional[int] = None) -> CauchyTable:
    """Run both routes and return the table; raise RouteMismatchError on any difference."""
    series = cauchy_via_series(n_max, bound=bound)
    stirling = cauchy_table_via_stirling(n_max, bound=bound)
    for n, (left, right) in enumerate(zip(series.c, stirling.c)):
        if left != right:
            logger.error("Exact routes disagree", extra={"n": n, "series": str(left), "stirling": str(right)})
            raise RouteMismatchError(f"routes disagree at n={n}: {left} != {right}", index=n)
    logger.info("Exact routes agree", extra={"n_max": n_max})
    return series


@lru_cache(maxsize=8)
def cauchy_table(n_max: int, bound: Optional[int] = None) -> CauchyTable:
    """Cached, cross-checked table through n_max."""
    return build_cauchy_table(n_max, bound=bound)
