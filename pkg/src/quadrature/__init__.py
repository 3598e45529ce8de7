"""High-precision numerical oracle for the integral representations."""

from src.quadrature.integrands import IntegrandKind, IntegrandSpec, transform_integrand
from src.quadrature.integrator import (
    QuadResult,
    compare_rules,
    eval_F,
    eval_h,
    eval_h_derivative,
    eval_h_general,
    eval_tail_moment,
    f_closed_form,
    integrate,
)
from src.quadrature.precision import BigFloat, format_mpf, to_mpf, working_context
from src.quadrature.rules import ClenshawCurtisRule, GaussLegendreRule, QuadratureRule, get_rule

__all__ = [
    "BigFloat",
    "ClenshawCurtisRule",
    "GaussLegendreRule",
    "IntegrandKind",
    "IntegrandSpec",
    "QuadResult",
    "QuadratureRule",
    "compare_rules",
    "eval_F",
    "eval_h",
    "eval_h_derivative",
    "eval_h_general",
    "eval_tail_moment",
    "f_closed_form",
    "format_mpf",
    "get_rule",
    "integrate",
    "to_mpf",
    "transform_integrand",
    "working_context",
]
