"""Witness search for minimality of the normalised moment sequence.

Lowering mu_0 by epsilon changes only the column d[k][0], each entry by
exactly -epsilon. The perturbed sequence therefore stops being completely
monotonic at the first order k with d[k][0] < epsilon.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

from src.core.exceptions import DomainError
from src.core.logging_config import get_logger
from src.exact.factorials import RationalLike, as_rational
from src.quadrature.integrator import Tolerance, eval_tail_moment
from src.quadrature.precision import BigFloat, to_mpf, working_context
from src.sequences.differences import DiffTable

logger = get_logger("sequences.minimality")


@dataclass(frozen=True)
class MinimalityProbe:
    epsilon: Fraction
    violation_order: Optional[int]
    d0_sequence: Tuple[Fraction, ...]
    depth: int

    @property
    def found(self) -> bool:
        return self.violation_order is not None

    @property
    def minimum_observed(self) -> Fraction:
        return min(self.d0_sequence)


def _positive_epsilon(epsilon: RationalLike) -> Fraction:
    value = as_rational(epsilon)
    if value <= 0:
        raise DomainError(f"epsilon must be positive, got {value}")
    return value


def minimality_probe(dt: DiffTable, epsilon: RationalLike) -> MinimalityProbe:
    """First k <= depth with d[k][0] < epsilon, or none."""
    eps = _positive_epsilon(epsilon)
    examined = []
    for k, value in enumerate(dt.column(0)):
        examined.append(value)
        if value < eps:
            logger.info("Minimality witness found", extra={"epsilon": str(eps), "k": k})
            return MinimalityProbe(eps, k, tuple(examined), dt.depth)
    logger.info("No minimality witness within depth", extra={"epsilon": str(eps), "depth": dt.depth})
    return MinimalityProbe(eps, None, tuple(examined), dt.depth)


@dataclass(frozen=True)
class WitnessEstimate:
    """Numerical counterpart of the probe, reaching orders beyond any exact table."""

    epsilon: Fraction
    order: Optional[int]
    value: Optional[BigFloat]
    k_max: int
    evaluations: int
    converged: bool


def estimate_witness_order(
    epsilon: RationalLike,
    tol: Tolerance,
    precision: int,
    k_max: int = 10**6,
    **options,
) -> WitnessEstimate:
    """Locate the first k with (-1)^k Delta^k mu_0 < epsilon from the tail-moment integral.

    The column is strictly decreasing in k, so exponential bracketing followed
    by bisection needs O(log k) quadratures.
    """
    eps = _positive_epsilon(epsilon)
    if eps > 1:
        return WitnessEstimate(eps, 0, None, k_max, 0, True)

    ctx = working_context(precision)
    eps_mpf = to_mpf(ctx, eps)
    evaluations = 0
    converged = True
    cache = {}

    def below(k: int) -> bool:
        nonlocal evaluations, converged
        if k not in cache:
            result = eval_tail_moment(k, tol, precision, **options)
            evaluations += 1
            converged = converged and result.converged
            cache[k] = to_mpf(ctx, result.value)
        return cache[k] < eps_mpf

    lo, hi = 0, 1
    while not below(hi):
        lo = hi
        if hi >= k_max:
            logger.warning("Witness search exhausted", extra={"epsilon": str(eps), "k_max": k_max})
            return WitnessEstimate(eps, None, cache[hi], k_max, evaluations, converged)
        hi = min(2 * hi, k_max)

    # invariant: value(lo) >= eps > value(hi)
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if below(mid):
            hi = mid
        else:
            lo = mid
    logger.info("Witness order estimated", extra={"epsilon": str(eps), "order": hi, "evaluations": evaluations})
    return WitnessEstimate(eps, hi, cache[hi], k_max, evaluations, converged)
