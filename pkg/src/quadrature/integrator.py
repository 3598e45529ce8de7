"""Nested-refinement integration of the transformed integrands."""

from __future__ import annotations

from dataclasses import dataclass
import math
from typing import Dict, Optional, Union

import mpmath

from src.core.exceptions import DomainError
from src.core.logging_config import get_logger
from src.core.settings import get_settings
from src.exact.factorials import RationalLike, as_rational
from src.quadrature.integrands import IntegrandSpec, transform_integrand
from src.quadrature.precision import BigFloat, format_mpf, parse_tolerance, to_mpf, working_context
from src.quadrature.rules import RULES, QuadratureRule, get_rule

logger = get_logger("quadrature")

Tolerance = Union[RationalLike, BigFloat]


@dataclass(frozen=True)
class QuadResult:
    """Best value with an a-posteriori estimate |Q_L - Q_{L-1}|."""

    value: BigFloat
    error_estimate: BigFloat
    nodes_used: int
    converged: bool
    precision: int
    rule: str


def _resolve_rule(rule: Union[str, QuadratureRule, None]) -> QuadratureRule:
    if rule is None:
        return get_rule(get_settings().quadrature.rule)
    if isinstance(rule, QuadratureRule):
        return rule
    return get_rule(rule)


def _apply_rule(ctx: mpmath.MPContext, f, rule: QuadratureRule, level: int) -> BigFloat:
    half_pi = ctx.pi / 2
    terms = []
    for raw_x, raw_w in rule.nodes(level, ctx.prec):
        x = ctx.make_mpf(raw_x)
        w = ctx.make_mpf(raw_w)
        terms.append(w * f(half_pi * x))
    return half_pi * ctx.fsum(terms)


def integrate(
    spec: IntegrandSpec,
    tol: Tolerance,
    precision: int,
    *,
    rule: Union[str, QuadratureRule, None] = None,
    min_level: Optional[int] = None,
    max_level: Optional[int] = None,
) -> QuadResult:
    """Integrate `spec` on (0, inf) through the tangent substitution.

    Levels are refined until two consecutive estimates agree within `tol`.
    Running out of levels is reported through `converged=False`, never raised.
    """
    spec.validated()
    settings = get_settings().quadrature
    quad_rule = _resolve_rule(rule)
    first = min_level if min_level is not None else settings.min_level
    last = max_level if max_level is not None else settings.max_level
    if first < 1 or last <= first:
        raise DomainError(f"need 1 <= min_level < max_level, got {first}, {last}")

    tolerance = parse_tolerance(tol)
    ctx = working_context(precision, settings.guard_bits)
    tol_mpf = to_mpf(ctx, tolerance)
    f = transform_integrand(spec, ctx)

    previous = _apply_rule(ctx, f, quad_rule, first)
    value, error = previous, ctx.inf
    for level in range(first + 1, last + 1):
        value = _apply_rule(ctx, f, quad_rule, level)
        error = abs(value - previous)
        logger.debug(
            "Refinement step",
            extra={"spec": spec.describe(), "level": level, "nodes": quad_rule.node_count(level)},
        )
        if error <= tol_mpf:
            return QuadResult(value, error, quad_rule.node_count(level), True, precision, quad_rule.name)
        previous = value

    logger.warning(
        "Quadrature did not converge",
        extra={"spec": spec.describe(), "max_level": last, "error": format_mpf(error, 5)},
    )
    return QuadResult(value, error, quad_rule.node_count(last), False, precision, quad_rule.name)


def eval_F(z: RationalLike, tol: Tolerance, precision: int, **options) -> QuadResult:
    """F(z) = z / ((1+z) ln(1+z)) on the real slice z > -1, through its integral representation."""
    return integrate(IntegrandSpec.f_at(z), tol, precision, **options)


def f_closed_form(z: RationalLike, precision: int) -> BigFloat:
    """Closed form of F at working precision; F(0) = 1."""
    z = as_rational(z)
    if z <= -1:
        raise DomainError(f"F requires z > -1, got {z}")
    ctx = working_context(precision, get_settings().quadrature.guard_bits)
    if z == 0:
        return ctx.one
    zf = to_mpf(ctx, z)
    return zf / ((1 + zf) * ctx.log1p(zf))


def eval_h(n: int, t: RationalLike, tol: Tolerance, precision: int, **options) -> QuadResult:
    """h_n(t); h_n(0) = c_n / n!."""
    return integrate(IntegrandSpec.h_at(n, t), tol, precision, **options)


def eval_h_general(s: RationalLike, t: RationalLike, tol: Tolerance, precision: int, **options) -> QuadResult:
    """h(t; s) for real s >= 0; coincides with h_s(t) at integer s."""
    return integrate(IntegrandSpec.h_general(s, t), tol, precision, **options)


def eval_h_derivative(ell: int, k: int, t: RationalLike, tol: Tolerance, precision: int, **options) -> QuadResult:
    """h_ell^{(k)}(t) = (-1)^k (ell+k)!/ell! h_{ell+k}(t)."""
    if isinstance(k, bool) or not isinstance(k, int) or k < 0:
        raise DomainError(f"derivative order must be a non-negative int, got {k!r}")
    if isinstance(ell, bool) or not isinstance(ell, int) or ell < 0:
        raise DomainError(f"ell must be a non-negative int, got {ell!r}")
    factor = math.factorial(ell + k) // math.factorial(ell)
    # tighten the inner tolerance so the scaled estimate still honours `tol`
    inner_tol = parse_tolerance(tol) / factor
    inner = eval_h(ell + k, t, inner_tol, precision, **options)
    sign = -1 if k % 2 else 1
    return QuadResult(
        value=sign * factor * inner.value,
        error_estimate=factor * inner.error_estimate,
        nodes_used=inner.nodes_used,
        converged=inner.converged,
        precision=precision,
        rule=inner.rule,
    )


def eval_tail_moment(k: int, tol: Tolerance, precision: int, **options) -> QuadResult:
    """Numerical (-1)^k Delta^k mu_0 = integral of (w/(1+w))^k."""
    return integrate(IntegrandSpec.tail_moment(k), tol, precision, **options)


def compare_rules(spec: IntegrandSpec, tol: Tolerance, precision: int, **options) -> Dict[str, QuadResult]:
    """Run every registered rule on the same integrand."""
    return {name: integrate(spec, tol, precision, rule=rule, **options) for name, rule in RULES.items()}
