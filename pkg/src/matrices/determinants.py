"""Exact square matrices over the rationals and their determinants."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
import math
from typing import Callable, List, Sequence, Tuple

from src.core.exceptions import DomainError
from src.exact.factorials import RationalLike, as_rational


@dataclass(frozen=True)
class IndexTuple:
    """Non-negative integer indices a_1..a_m; duplicates are allowed."""

    values: Tuple[int, ...]

    def __post_init__(self) -> None:
        for value in self.values:
            if isinstance(value, bool) or not isinstance(value, int) or value < 0:
                raise DomainError(f"index tuple entries must be non-negative ints, got {self.values!r}")

    @classmethod
    def of(cls, values: Sequence[int]) -> "IndexTuple":
        return cls(tuple(values))

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    @property
    def largest(self) -> int:
        return max(self.values, default=0)

    @property
    def total(self) -> int:
        return sum(self.values)


@dataclass(frozen=True)
class ExactMatrix:
    rows: Tuple[Tuple[Fraction, ...], ...]

    def __post_init__(self) -> None:
        order = len(self.rows)
        if any(len(row) != order for row in self.rows):
            raise DomainError("matrix must be square")

    @classmethod
    def of(cls, rows: Sequence[Sequence[RationalLike]]) -> "ExactMatrix":
        return cls(tuple(tuple(as_rational(v) for v in row) for row in rows))

    @classmethod
    def hankel(cls, a: IndexTuple, entry: Callable[[int], Fraction]) -> "ExactMatrix":
        """Matrix with (i, j) entry `entry(a_i + a_j)`."""
        return cls(tuple(tuple(entry(ai + aj) for aj in a) for ai in a))

    @classmethod
    def identity(cls, order: int) -> "ExactMatrix":
        return cls(tuple(tuple(Fraction(int(i == j)) for j in range(order)) for i in range(order)))

    @property
    def order(self) -> int:
        return len(self.rows)


def sign_twisted(mat: ExactMatrix, a: IndexTuple) -> ExactMatrix:
    """Entries (-1)^(a_i + a_j) M_ij; the determinant is unchanged."""
    if len(a) != mat.order:
        raise DomainError(f"tuple of length {len(a)} does not match order {mat.order}")
    return ExactMatrix(
        tuple(
            tuple(-value if (ai + aj) % 2 else value for aj, value in zip(a, row))
            for ai, row in zip(a, mat.rows)
        )
    )


def _bareiss(matrix: List[List[int]]) -> int:
    """Fraction-free elimination; every division below is exact."""
    n = len(matrix)
    sign = 1
    previous = 1
    for k in range(n - 1):
        if matrix[k][k] == 0:
            for i in range(k + 1, n):
                if matrix[i][k] != 0:
                    matrix[k], matrix[i] = matrix[i], matrix[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = matrix[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                matrix[i][j] = (pivot * matrix[i][j] - matrix[i][k] * matrix[k][j]) // previous
        previous = pivot
    return sign * matrix[n - 1][n - 1]


def det_exact(mat: ExactMatrix) -> Fraction:
    """Determinant by clearing to a common denominator then Bareiss; det of the empty matrix is 1."""
    order = mat.order
    if order == 0:
        return Fraction(1)
    denominator = math.lcm(*(value.denominator for row in mat.rows for value in row))
    scaled = [[int(value * denominator) for value in row] for row in mat.rows]
    return Fraction(_bareiss(scaled), denominator**order)


def det_cofactor(mat: ExactMatrix) -> Fraction:
    """Laplace expansion along the first row; exponential, for cross-checks only."""
    rows = mat.rows
    if not rows:
        return Fraction(1)
    if len(rows) == 1:
        return rows[0][0]
    total = Fraction(0)
    for j, value in enumerate(rows[0]):
        if value == 0:
            continue
        minor = ExactMatrix(tuple(row[:j] + row[j + 1 :] for row in rows[1:]))
        term = value * det_cofactor(minor)
        total += -term if j % 2 else term
    return total
