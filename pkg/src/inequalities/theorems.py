"""Exact product inequalities over the Cauchy table."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from src.core.exceptions import ContractViolationError, DomainError
from src.exact.cauchy import CauchyTable
from src.inequalities.majorization import MajPair
from src.reports.models import CaseRecord, CheckReport, ReportValue, case_key


def _nonnegative(name: str, value: int) -> None:
    if isinstance(value, bool) or not isinstance(value, int) or value < 0:
        raise DomainError(f"{name} must be a non-negative int, got {value!r}")


def product_of(values: Iterable[Fraction]) -> Fraction:
    result = Fraction(1)
    for value in values:
        result *= value
    return result


def _le_case(key: str, inputs: dict, lhs: Fraction, rhs: Fraction, **extras) -> CaseRecord:
    """Case for lhs <= rhs; the margin rhs - lhs is non-negative when it holds."""
    return CaseRecord(
        key=key,
        inputs=inputs,
        lhs=ReportValue.of(lhs),
        rhs=ReportValue.of(rhs),
        holds=lhs <= rhs,
        margin=ReportValue.of(rhs - lhs),
        extras=extras,
    )


def check_thm4_shifted(pair: MajPair, n: int, table: CauchyTable) -> CheckReport:
    """prod c_{n+lambda_i} <= prod c_{n+mu_i} for lambda majorized by mu."""
    if not pair.verified:
        raise ContractViolationError(f"{pair.lam} is not verified to be majorized by {pair.mu}")
    _nonnegative("shift n", n)
    table.require(n + pair.largest)
    lhs = product_of(table.c[n + x] for x in pair.lam)
    rhs = product_of(table.c[n + x] for x in pair.mu)
    return CheckReport.single(
        "thm4",
        _le_case(
            case_key(n=n, lam=pair.lam, mu=pair.mu),
            {"n": n, "lambda": list(pair.lam), "mu": list(pair.mu)},
            lhs,
            rhs,
            strict_pair=pair.strict,
        ),
    )


def check_thm4(pair: MajPair, table: CauchyTable) -> CheckReport:
    return check_thm4_shifted(pair, 0, table)


def check_cor_power(ell: int, n: int, k: int, table: CauchyTable) -> CheckReport:
    """(c_{ell+k})^n <= (c_{ell+n})^k (c_ell)^(n-k) for n > k > 0."""
    _nonnegative("ell", ell)
    _nonnegative("n", n)
    _nonnegative("k", k)
    if not n > k > 0:
        raise DomainError(f"power form needs n > k > 0, got n={n}, k={k}")
    table.require(ell + n)
    c = table.c
    lhs = c[ell + k] ** n
    rhs = c[ell + n] ** k * c[ell] ** (n - k)
    return CheckReport.single(
        "power",
        _le_case(case_key(ell=ell, n=n, k=k), {"ell": ell, "n": n, "k": k}, lhs, rhs),
    )


def thm5_hypothesis(n: int, k: int, m: int) -> bool:
    return n >= k >= m and 2 * k >= n and 2 * m >= n


def check_thm5(ell: int, n: int, k: int, m: int, table: CauchyTable) -> CheckReport:
    """c_{ell+k} c_{ell+n-k} >= c_{ell+m} c_{ell+n-m} under n >= k >= m, k >= n-k, m >= n-m."""
    for name, value in (("ell", ell), ("n", n), ("k", k), ("m", m)):
        _nonnegative(name, value)
    if not thm5_hypothesis(n, k, m):
        raise DomainError(f"(n, k, m) = ({n}, {k}, {m}) violates n >= k >= m, k >= n-k, m >= n-m")
    table.require(ell + n)
    c = table.c
    lhs = c[ell + k] * c[ell + n - k]
    rhs = c[ell + m] * c[ell + n - m]
    # stated as lhs >= rhs; the case keeps the <= orientation with sides swapped
    return CheckReport.single(
        "thm5",
        _le_case(case_key(ell=ell, n=n, k=k, m=m), {"ell": ell, "n": n, "k": k, "m": m}, rhs, lhs),
    )


@dataclass(frozen=True)
class GhiValues:
    g: Fraction
    h: Fraction
    i: Fraction


def compute_ghi(n: int, m: int, ell: int, table: CauchyTable) -> GhiValues:
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise DomainError(f"n must be a positive int, got {n!r}")
    if isinstance(m, bool) or not isinstance(m, int) or m < 1:
        raise DomainError(f"m must be a positive int, got {m!r}")
    _nonnegative("ell", ell)
    table.require(ell + n + 2 * m)
    c = table.c
    base = c[ell]
    head = c[ell + n + 2 * m] * base**2
    tail = c[ell + n] * c[ell + m] ** 2
    mixed = c[ell + n + m] * c[ell + m] * base
    crossed = c[ell + n] * c[ell + 2 * m] * base
    return GhiValues(
        g=head - mixed - crossed + tail,
        h=head - 2 * mixed + tail,
        i=head - 2 * crossed + tail,
    )


def _sign(value: int | Fraction) -> int:
    return (value > 0) - (value < 0)


def check_thm6(n: int, m: int, ell: int, table: CauchyTable) -> CheckReport:
    """G >= 0, H >= 0, sign(H - G) = sign(m - n), and I >= G when n >= m."""
    values = compute_ghi(n, m, ell, table)
    difference = values.h - values.g
    conditions = {
        "g_nonnegative": values.g >= 0,
        "h_nonnegative": values.h >= 0,
        "branch": _sign(difference) == _sign(m - n),
        "i_dominates": values.i >= values.g if n >= m else True,
    }
    case = CaseRecord(
        key=case_key(ell=ell, n=n, m=m),
        inputs={"n": n, "m": m, "ell": ell},
        lhs=ReportValue.of(values.g),
        rhs=ReportValue.of(values.h),
        holds=all(conditions.values()),
        margin=ReportValue.of(difference),
        extras={
            "g": ReportValue.of(values.g).model_dump(),
            "h": ReportValue.of(values.h).model_dump(),
            "i": ReportValue.of(values.i).model_dump(),
            **conditions,
        },
    )
    return CheckReport.single("thm6", case)
