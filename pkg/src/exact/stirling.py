"""Unsigned Stirling numbers of the first kind."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Tuple

from src.core.exceptions import ConsistencyError
from src.core.guards import CapacityGuard
from src.core.logging_config import get_logger


@dataclass(frozen=True)
class StirlingTriangle:
    """Row n holds s(n, 0..n), the coefficients of the rising factorial (x)_n."""

    rows: Tuple[Tuple[int, ...], ...]

    @property
    def n_max(self) -> int:
        return len(self.rows) - 1

    def row(self, n: int) -> Tuple[int, ...]:
        return self.rows[n]

    def entry(self, n: int, k: int) -> int:
        if k < 0 or k > n:
            return 0
        return self.rows[n][k]

    def verify(self) -> None:
        """Re-check the recurrence and the n! row sums; raise ConsistencyError on mismatch."""
        factorial = 1
        for n, row in enumerate(self.rows):
            if n > 0:
                factorial *= n
            if row[n] != 1 or (n > 0 and row[0] != 0):
                raise ConsistencyError(f"boundary entries wrong in row {n}")
            if sum(row) != factorial:
                raise ConsistencyError(f"row {n} does not sum to {n}!")
            if n == 0:
                continue
            prev = self.rows[n - 1]
            for k in range(1, n + 1):
                expected = (n - 1) * self.entry(n - 1, k) + prev[k - 1]
                if row[k] != expected:
                    raise ConsistencyError(f"recurrence fails at s({n},{k})")


def build_stirling(n_max: int, *, bound: Optional[int] = None, guard: Optional[CapacityGuard] = None) -> StirlingTriangle:
    """Build s(n, k) for 0 <= k <= n <= n_max by s(n+1,k) = n s(n,k) + s(n,k-1)."""
    guard = guard or CapacityGuard()
    guard.validate_table_size(n_max, bound=bound, what="Stirling triangle")

    rows = [(1,)]
    for n in range(n_max):
        prev = rows[-1]
        row = [0] * (n + 2)
        for k in range(1, n + 2):
            left = prev[k] if k <= n else 0
            row[k] = n * left + prev[k - 1]
        rows.append(tuple(row))

    get_logger("exact.stirling").debug("Stirling triangle built", extra={"n_max": n_max})
    return StirlingTriangle(rows=tuple(rows))
