"""Exact log-convexity of a positive sequence: x_{n+1}^2 <= x_n x_{n+2}."""

from __future__ import annotations

from typing import Sequence

from src.core.exceptions import DomainError
from src.core.logging_config import get_logger
from src.exact.cauchy import CauchyTable
from src.exact.factorials import RationalLike, as_rational
from src.reports.models import CaseRecord, CheckReport, ReportValue, case_key

logger = get_logger("sequences.log_convexity")


def check_log_convexity_values(values: Sequence[RationalLike], *, suite: str = "logconvex") -> CheckReport:
    terms = [as_rational(v) for v in values]
    if len(terms) < 3:
        raise DomainError(f"log-convexity needs at least three terms, got {len(terms)}")
    cases = []
    for n in range(len(terms) - 2):
        lhs = terms[n + 1] ** 2
        rhs = terms[n] * terms[n + 2]
        cases.append(
            CaseRecord(
                key=case_key(n=n),
                inputs={"n": n},
                lhs=ReportValue.of(lhs),
                rhs=ReportValue.of(rhs),
                holds=lhs <= rhs,
                margin=ReportValue.of(rhs - lhs),
            )
        )
    return CheckReport.from_cases(suite, cases, parameters={"n_max": len(terms) - 1})


def check_log_convexity(table: CauchyTable, *, suite: str = "logconvex") -> CheckReport:
    """c_{n+1}^2 <= c_n c_{n+2} for 0 <= n <= n_max - 2."""
    table.require(2)
    report = check_log_convexity_values(table.c, suite=suite)
    logger.info("Log-convexity checked", extra={"n_max": table.n_max, "failed": report.failed})
    return report
