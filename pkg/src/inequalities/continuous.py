"""Function-level forms of the inequalities at t > 0, evaluated by quadrature.

Each exact inequality is the t -> 0+ limit of one between derivatives of
h_ell(t); here the derivatives are taken through
h_ell^(k)(t) = (-1)^k (ell+k)!/ell! h_{ell+k}(t) and compared at t > 0.
"""

from __future__ import annotations

from typing import Dict, Iterable

from src.core.exceptions import ContractViolationError, DomainError
from src.exact.factorials import RationalLike, as_rational
from src.inequalities.majorization import MajPair
from src.quadrature.integrator import Tolerance, eval_h_derivative
from src.quadrature.precision import BigFloat, parse_tolerance, to_mpf, working_context
from src.reports.models import CaseRecord, CheckReport, ReportValue, case_key

# comparisons allow this many tolerances of slack, scaled by the larger side
SLACK_FACTOR = 10


def _magnitudes(ell: int, orders: Iterable[int], t, tol, precision, ctx, options) -> tuple:
    values: Dict[int, BigFloat] = {}
    converged = True
    for k in sorted(set(orders)):
        result = eval_h_derivative(ell, k, t, tol, precision, **options)
        converged = converged and result.converged
        values[k] = abs(to_mpf(ctx, result.value))
    return values, converged


def _compare(ctx, lhs: BigFloat, rhs: BigFloat, tol) -> bool:
    slack = SLACK_FACTOR * to_mpf(ctx, parse_tolerance(tol)) * (1 + max(lhs, rhs))
    return lhs <= rhs + slack


def _checked_t(t: RationalLike):
    value = as_rational(t)
    if value <= 0:
        raise DomainError(f"function-level checks need t > 0, got {value}")
    return value


def check_thm4_at(
    pair: MajPair, n: int, t: RationalLike, tol: Tolerance, precision: int, **options
) -> CheckReport:
    """|prod h_n^(lambda_i)(t)| <= |prod h_n^(mu_i)(t)|."""
    if not pair.verified:
        raise ContractViolationError(f"{pair.lam} is not verified to be majorized by {pair.mu}")
    t = _checked_t(t)
    ctx = working_context(precision)
    values, converged = _magnitudes(n, pair.lam + pair.mu, t, tol, precision, ctx, options)
    lhs = ctx.fprod([values[k] for k in pair.lam])
    rhs = ctx.fprod([values[k] for k in pair.mu])
    case = CaseRecord(
        key=case_key(t=str(t), n=n, lam=pair.lam, mu=pair.mu),
        inputs={"t": str(t), "n": n, "lambda": list(pair.lam), "mu": list(pair.mu)},
        lhs=ReportValue.approximate(lhs),
        rhs=ReportValue.approximate(rhs),
        holds=converged and _compare(ctx, lhs, rhs, tol),
        margin=ReportValue.approximate(rhs - lhs),
        extras={"converged": converged},
    )
    return CheckReport.single("continuous", case)


def check_log_convexity_at(
    ell: int, i: int, t: RationalLike, tol: Tolerance, precision: int, **options
) -> CheckReport:
    """|h_ell^(i+1)(t)|^2 <= |h_ell^(i)(t)| |h_ell^(i+2)(t)|."""
    t = _checked_t(t)
    ctx = working_context(precision)
    values, converged = _magnitudes(ell, (i, i + 1, i + 2), t, tol, precision, ctx, options)
    lhs = values[i + 1] ** 2
    rhs = values[i] * values[i + 2]
    case = CaseRecord(
        key=case_key(t=str(t), ell=ell, i=i),
        inputs={"t": str(t), "ell": ell, "i": i},
        lhs=ReportValue.approximate(lhs),
        rhs=ReportValue.approximate(rhs),
        holds=converged and _compare(ctx, lhs, rhs, tol),
        margin=ReportValue.approximate(rhs - lhs),
        extras={"converged": converged},
    )
    return CheckReport.single("continuous", case)
