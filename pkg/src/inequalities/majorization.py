"""Majorization of non-negative integer tuples."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import accumulate, combinations_with_replacement
import random
from typing import Iterator, List, Sequence, Tuple

from src.core.exceptions import DomainError


@dataclass(frozen=True)
class MajorizationResult:
    majorized: bool
    strict: bool

    def __bool__(self) -> bool:
        return self.majorized


def _indices(values: Sequence[int], name: str) -> Tuple[int, ...]:
    out = tuple(values)
    for value in out:
        if isinstance(value, bool) or not isinstance(value, int) or value < 0:
            raise DomainError(f"{name} must hold non-negative ints, got {out!r}")
    return out


def is_majorized(lam: Sequence[int], mu: Sequence[int]) -> MajorizationResult:
    """lam is majorized by mu: descending partial sums of lam never exceed those of mu, totals equal."""
    lam = _indices(lam, "lambda")
    mu = _indices(mu, "mu")
    if len(lam) != len(mu):
        raise DomainError(f"tuples differ in length: {len(lam)} != {len(mu)}")
    lam_desc = sorted(lam, reverse=True)
    mu_desc = sorted(mu, reverse=True)
    lam_sums = list(accumulate(lam_desc))
    mu_sums = list(accumulate(mu_desc))
    majorized = sum(lam) == sum(mu) and all(x <= y for x, y in zip(lam_sums, mu_sums))
    return MajorizationResult(majorized, majorized and lam_desc != mu_desc)


@dataclass(frozen=True)
class MajPair:
    """A pair (lambda, mu); `verified` records whether lambda is majorized by mu."""

    lam: Tuple[int, ...]
    mu: Tuple[int, ...]
    verified: bool = False
    strict: bool = False

    @classmethod
    def of(cls, lam: Sequence[int], mu: Sequence[int]) -> "MajPair":
        result = is_majorized(lam, mu)
        return cls(tuple(lam), tuple(mu), result.majorized, result.strict)

    @property
    def largest(self) -> int:
        return max(self.lam + self.mu, default=0)


def descending_tuples(m: int, entry_max: int) -> Iterator[Tuple[int, ...]]:
    for values in combinations_with_replacement(range(entry_max, -1, -1), m):
        yield values


def majorization_pairs(m_max: int, entry_max: int) -> List[MajPair]:
    """Every majorized pair of descending tuples with length <= m_max and entries <= entry_max."""
    pairs = []
    for m in range(1, m_max + 1):
        by_total = {}
        for values in descending_tuples(m, entry_max):
            by_total.setdefault(sum(values), []).append(values)
        for total in sorted(by_total):
            group = by_total[total]
            for lam in group:
                for mu in group:
                    pair = MajPair.of(lam, mu)
                    if pair.verified:
                        pairs.append(pair)
    return pairs


def robin_hood_step(values: Sequence[int], rng: random.Random) -> Tuple[int, ...]:
    """Move one unit from a larger entry to a smaller one; the result is majorized by the input."""
    out = list(values)
    candidates = [(i, j) for i in range(len(out)) for j in range(len(out)) if out[i] > out[j]]
    if not candidates:
        return tuple(out)
    i, j = rng.choice(candidates)
    out[i] -= 1
    out[j] += 1
    return tuple(out)


def random_chain(m: int, entry_max: int, rng: random.Random, *, steps: int = 3) -> Tuple[Tuple[int, ...], ...]:
    """A chain lambda <= nu <= mu built by repeated Robin Hood transfers from a random mu."""
    mu = tuple(rng.randint(0, entry_max) for _ in range(m))
    nu = mu
    for _ in range(rng.randint(0, steps)):
        nu = robin_hood_step(nu, rng)
    lam = nu
    for _ in range(rng.randint(0, steps)):
        lam = robin_hood_step(lam, rng)
    return lam, nu, mu
