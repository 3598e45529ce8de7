"""Signed finite-difference tables d[k][n] = (-1)^k Delta^k mu_n."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable, List, Optional, Sequence, Tuple

from src.core.exceptions import ConsistencyError, DomainError
from src.core.guards import CapacityGuard
from src.core.logging_config import get_logger
from src.exact.cauchy import CauchyTable
from src.exact.factorials import RationalLike, as_rational
from src.reports.models import CaseRecord, CheckReport, ReportValue, case_key

logger = get_logger("sequences.differences")

# Every entry with k + n below this is re-derived from the binomial sum.
BINOMIAL_SAMPLE_DEPTH = 16


@dataclass(frozen=True)
class DiffTable:
    """Row k holds d[k][0..K-k]; d[0] is the sequence itself."""

    d: Tuple[Tuple[Fraction, ...], ...]

    @property
    def depth(self) -> int:
        return len(self.d) - 1

    def entry(self, k: int, n: int) -> Fraction:
        return self.d[k][n]

    def column(self, n: int = 0) -> Tuple[Fraction, ...]:
        return tuple(row[n] for row in self.d if len(row) > n)

    def entries(self) -> Iterable[Tuple[int, int, Fraction]]:
        for k, row in enumerate(self.d):
            for n, value in enumerate(row):
                yield k, n, value

    @classmethod
    def from_sequence(cls, values: Sequence[RationalLike], depth: Optional[int] = None) -> "DiffTable":
        """Difference table of an arbitrary finite sequence, through k + n <= depth."""
        sequence = [as_rational(v) for v in values]
        if not sequence:
            raise DomainError("a difference table needs at least one term")
        depth = len(sequence) - 1 if depth is None else depth
        CapacityGuard().validate_coverage(depth, len(sequence) - 1, what="sequence")
        rows: List[Tuple[Fraction, ...]] = [tuple(sequence[: depth + 1])]
        for _ in range(depth):
            prev = rows[-1]
            rows.append(tuple(prev[n] - prev[n + 1] for n in range(len(prev) - 1)))
        return cls(d=tuple(rows))


def binomial_difference(mu: Sequence[Fraction], k: int, n: int) -> Fraction:
    """(-1)^k Delta^k mu_n by the binomial sum, independent of the recurrence."""
    total = Fraction(0)
    for m in range(k + 1):
        term = comb(k, m) * mu[n + m]
        total += -term if m % 2 else term
    return total


def validate_binomial(dt: DiffTable, *, sample_depth: int = BINOMIAL_SAMPLE_DEPTH) -> int:
    """Cross-check a deterministic subset of entries; return how many were checked."""
    mu = dt.d[0]
    checked = 0
    depth = dt.depth
    for k, n, value in dt.entries():
        on_edge = n == 0 or k + n == depth
        if k + n > sample_depth and not on_edge:
            continue
        if binomial_difference(mu, k, n) != value:
            raise ConsistencyError(f"recurrence and binomial sum disagree at d[{k}][{n}]")
        checked += 1
    return checked


def build_diff_table(table: CauchyTable, depth: int) -> DiffTable:
    """Difference table of mu_n = c_n / n! for k + n <= depth."""
    guard = CapacityGuard()
    guard.validate_index(depth, what="depth")
    table.require(depth)
    dt = DiffTable.from_sequence(table.mu, depth)
    checked = validate_binomial(dt)
    logger.debug("Difference table built", extra={"depth": depth, "binomial_checked": checked})
    return dt


def check_complete_monotonicity(dt: DiffTable, *, suite: str = "cm") -> CheckReport:
    """One case per difference order k; the suite passes iff no entry is negative."""
    cases = []
    minimum: Optional[Tuple[int, int, Fraction]] = None
    strictly_positive = True
    for k, row in enumerate(dt.d):
        n_min = min(range(len(row)), key=lambda n: row[n])
        row_min = row[n_min]
        if minimum is None or row_min < minimum[2]:
            minimum = (k, n_min, row_min)
        strictly_positive = strictly_positive and row_min > 0
        cases.append(
            CaseRecord(
                key=case_key(k=k),
                inputs={"k": k, "entries": len(row)},
                lhs=ReportValue.of(row_min),
                rhs=ReportValue.of(0),
                holds=row_min >= 0,
                margin=ReportValue.of(row_min),
                extras={
                    "min_at_n": n_min,
                    "non_increasing": all(row[n] >= row[n + 1] for n in range(len(row) - 1)),
                },
            )
        )

    parameters = {
        "depth": dt.depth,
        "entries": sum(len(row) for row in dt.d),
        "strictly_positive": strictly_positive,
    }
    if minimum is not None:
        parameters["minimum"] = ReportValue.of(minimum[2]).model_dump()
        parameters["minimum_at"] = [minimum[0], minimum[1]]
    report = CheckReport.from_cases(suite, cases, parameters=parameters)
    logger.info("Complete monotonicity checked", extra={"depth": dt.depth, "failed": report.failed})
    return report
