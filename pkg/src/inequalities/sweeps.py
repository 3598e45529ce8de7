"""Exhaustive and seeded random sweeps over the inequality checks."""

from __future__ import annotations

import random
from typing import Sequence

from src.core.logging_config import get_logger
from src.exact.cauchy import CauchyTable
from src.inequalities.majorization import MajPair, majorization_pairs, random_chain
from src.inequalities.theorems import (
    check_cor_power,
    check_thm4_shifted,
    check_thm5,
    check_thm6,
    product_of,
    thm5_hypothesis,
)
from src.reports.models import CaseRecord, CheckReport, ReportValue, case_key

logger = get_logger("inequalities.sweeps")


def sweep_thm4(table: CauchyTable, m_max: int, entry_max: int, *, shifts: Sequence[int] = (0,)) -> CheckReport:
    table.require(max(shifts) + entry_max)
    pairs = majorization_pairs(m_max, entry_max)
    reports = [check_thm4_shifted(pair, n, table) for n in shifts for pair in pairs]
    merged = CheckReport.merge(
        "thm4", reports, parameters={"m_max": m_max, "entry_max": entry_max, "shifts": list(shifts)}
    )
    logger.info("Majorization sweep complete", extra={"pairs": len(pairs), "failed": merged.failed})
    return merged


def sweep_cor_power(table: CauchyTable, ell_max: int, n_max: int) -> CheckReport:
    table.require(ell_max + n_max)
    reports = [
        check_cor_power(ell, n, k, table)
        for ell in range(ell_max + 1)
        for n in range(2, n_max + 1)
        for k in range(1, n)
    ]
    return CheckReport.merge("power", reports, parameters={"ell_max": ell_max, "n_max": n_max})


def sweep_thm5(table: CauchyTable, ell_max: int, n_max: int) -> CheckReport:
    table.require(ell_max + n_max)
    reports = [
        check_thm5(ell, n, k, m, table)
        for ell in range(ell_max + 1)
        for n in range(n_max + 1)
        for k in range(n + 1)
        for m in range(k + 1)
        if thm5_hypothesis(n, k, m)
    ]
    return CheckReport.merge("thm5", reports, parameters={"ell_max": ell_max, "n_max": n_max})


def sweep_thm6(table: CauchyTable, nm_max: int, ell_max: int) -> CheckReport:
    table.require(ell_max + 3 * nm_max)
    reports = [
        check_thm6(n, m, ell, table)
        for ell in range(ell_max + 1)
        for n in range(1, nm_max + 1)
        for m in range(1, nm_max + 1)
    ]
    return CheckReport.merge("thm6", reports, parameters={"nm_max": nm_max, "ell_max": ell_max})


def random_chains(table: CauchyTable, count: int, seed: int, *, m: int = 3, entry_max: int = 6) -> CheckReport:
    """Transitivity: for lambda <= nu <= mu, prod c_lambda <= prod c_nu <= prod c_mu."""
    table.require(entry_max)
    rng = random.Random(seed)
    cases = []
    for index in range(count):
        lam, nu, mu = random_chain(m, entry_max, rng)
        lower = MajPair.of(lam, nu)
        upper = MajPair.of(nu, mu)
        p_lam, p_nu, p_mu = (product_of(table.c[x] for x in values) for values in (lam, nu, mu))
        cases.append(
            CaseRecord(
                key=case_key(chain=index),
                inputs={"lambda": list(lam), "nu": list(nu), "mu": list(mu)},
                lhs=ReportValue.of(p_lam),
                rhs=ReportValue.of(p_mu),
                holds=lower.verified and upper.verified and p_lam <= p_nu <= p_mu,
                margin=ReportValue.of(p_mu - p_lam),
                extras={"middle": ReportValue.of(p_nu).model_dump()},
            )
        )
    return CheckReport.from_cases(
        "chains", cases, parameters={"count": count, "m": m, "entry_max": entry_max}, seed=seed
    )
