"""Determinant inequalities for Hankel-type matrices built from the Cauchy table."""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Iterator, Sequence, Union

from src.core.exceptions import DomainError
from src.core.logging_config import get_logger
from src.exact.cauchy import CauchyTable
from src.matrices.determinants import ExactMatrix, IndexTuple, det_exact, sign_twisted
from src.reports.models import CaseRecord, CheckReport, ReportValue, case_key

logger = get_logger("matrices.checks")

TupleLike = Union[IndexTuple, Sequence[int]]


def _as_tuple(a: TupleLike) -> IndexTuple:
    return a if isinstance(a, IndexTuple) else IndexTuple.of(a)


def _check_shift(n: int) -> None:
    if isinstance(n, bool) or not isinstance(n, int) or n < 0:
        raise DomainError(f"shift n must be a non-negative int, got {n!r}")


def cauchy_matrix(table: CauchyTable, n: int, a: IndexTuple) -> ExactMatrix:
    table.require(n + 2 * a.largest)
    return ExactMatrix.hankel(a, lambda index: table.c[n + index])


def moment_matrix(table: CauchyTable, a: IndexTuple) -> ExactMatrix:
    table.require(2 * a.largest)
    return ExactMatrix.hankel(a, lambda index: table.mu[index])


def _det_case(key: str, inputs: dict, value: Fraction, **extras) -> CaseRecord:
    return CaseRecord(
        key=key,
        inputs=inputs,
        lhs=ReportValue.of(value),
        rhs=ReportValue.of(0),
        holds=value >= 0,
        margin=ReportValue.of(value),
        extras=extras,
    )


def _thm3_case(n: int, a: TupleLike, table: CauchyTable) -> tuple:
    _check_shift(n)
    a = _as_tuple(a)
    if not len(a):
        raise DomainError("Hankel checks need a non-empty index tuple")
    plain = cauchy_matrix(table, n, a)
    unsigned = det_exact(plain)
    key = case_key(m=len(a), n=n, a=a.values)
    inputs = {"m": len(a), "n": n, "a": list(a.values)}
    return a, plain, unsigned, key, inputs


def check_thm3_signed(n: int, a: TupleLike, table: CauchyTable) -> CheckReport:
    """det((-1)^(a_i+a_j) c_{n+a_i+a_j}) >= 0; also records that it equals the unsigned determinant."""
    a, plain, unsigned, key, inputs = _thm3_case(n, a, table)
    signed = det_exact(sign_twisted(plain, a))
    case = _det_case(
        key,
        inputs,
        signed,
        unsigned_det=ReportValue.of(unsigned).model_dump(),
        sign_extraction_holds=signed == unsigned,
    )
    return CheckReport.single("thm3", case)


def check_thm3_unsigned(n: int, a: TupleLike, table: CauchyTable) -> CheckReport:
    """det(c_{n+a_i+a_j}) >= 0 with no sign factor."""
    _, _, unsigned, key, inputs = _thm3_case(n, a, table)
    return CheckReport.single("thm3-unsigned", _det_case(key, inputs, unsigned))


def check_thm3_plain(n: int, a: TupleLike, table: CauchyTable) -> CheckReport:
    """The literal (-1)^(mn) det(c_{n+a_i+a_j}) >= 0, reported as stated.

    The unsigned determinant is attached so a failing literal case can be
    read against it.
    """
    a, _, unsigned, key, inputs = _thm3_case(n, a, table)
    literal = -unsigned if (len(a) * n) % 2 else unsigned
    case = _det_case(
        key,
        inputs,
        literal,
        unsigned_det=ReportValue.of(unsigned).model_dump(),
        unsigned_holds=unsigned >= 0,
    )
    return CheckReport.single("thm3-literal", case)


def check_thm7_det(a: TupleLike, table: CauchyTable) -> CheckReport:
    """det(c_{a_i+a_j} / (a_i+a_j)!) >= 0."""
    a = _as_tuple(a)
    if not len(a):
        raise DomainError("Hankel checks need a non-empty index tuple")
    value = det_exact(moment_matrix(table, a))
    case = _det_case(case_key(m=len(a), a=a.values), {"m": len(a), "a": list(a.values)}, value)
    return CheckReport.single("thm7-det", case)


def check_thm7_product(a0: int, a: TupleLike, table: CauchyTable) -> CheckReport:
    """mu_{a0}^(m-1) mu_{a0 + sum a} >= prod_k mu_{a0 + a_k}."""
    _check_shift(a0)
    a = _as_tuple(a)
    m = len(a)
    if m < 1:
        raise DomainError("the product form needs m >= 1")
    total = a0 + a.total
    table.require(total)
    mu = table.mu
    lhs = mu[a0] ** (m - 1) * mu[total]
    rhs = Fraction(1)
    for ak in a:
        rhs *= mu[a0 + ak]
    case = CaseRecord(
        key=case_key(m=m, a0=a0, a=a.values),
        inputs={"m": m, "a0": a0, "a": list(a.values)},
        lhs=ReportValue.of(lhs),
        rhs=ReportValue.of(rhs),
        holds=lhs >= rhs,
        margin=ReportValue.of(lhs - rhs),
    )
    return CheckReport.single("thm7-product", case)


def index_tuples(m_max: int, entry_max: int, *, m_min: int = 1) -> Iterator[IndexTuple]:
    """Non-decreasing tuples of length m_min..m_max with entries in [0, entry_max].

    A simultaneous row and column permutation leaves a determinant unchanged,
    so these cover every tuple up to reordering.
    """
    for m in range(m_min, m_max + 1):
        for values in combinations_with_replacement(range(entry_max + 1), m):
            yield IndexTuple(values)


def sweep_thm3(table: CauchyTable, n_max: int, m_max: int, entry_max: int, *, form: str = "signed") -> CheckReport:
    checks = {
        "signed": ("thm3", check_thm3_signed),
        "unsigned": ("thm3-unsigned", check_thm3_unsigned),
        "literal": ("thm3-literal", check_thm3_plain),
    }
    if form not in checks:
        raise DomainError(f"unknown Hankel form {form!r}; choose from {sorted(checks)}")
    suite, check = checks[form]
    table.require(n_max + 2 * entry_max)
    reports = [check(n, a, table) for n in range(n_max + 1) for a in index_tuples(m_max, entry_max)]
    merged = CheckReport.merge(
        suite, reports, parameters={"n_max": n_max, "m_max": m_max, "entry_max": entry_max}
    )
    logger.info("Hankel sweep complete", extra={"suite": suite, "cases": len(merged.cases), "failed": merged.failed})
    return merged


def sweep_thm7_det(table: CauchyTable, m_max: int, entry_max: int) -> CheckReport:
    table.require(2 * entry_max)
    reports = [check_thm7_det(a, table) for a in index_tuples(m_max, entry_max)]
    return CheckReport.merge("thm7-det", reports, parameters={"m_max": m_max, "entry_max": entry_max})


def sweep_thm7_product(table: CauchyTable, m_max: int, entry_max: int) -> CheckReport:
    table.require(entry_max * (m_max + 1))
    reports = [
        check_thm7_product(a0, a, table)
        for a0 in range(entry_max + 1)
        for a in index_tuples(m_max, entry_max)
    ]
    return CheckReport.merge("thm7-product", reports, parameters={"m_max": m_max, "entry_max": entry_max})
