"""Nested quadrature rules on [-1, 1].

Level L of every rule doubles the resolution of level L-1, so a pair of
consecutive levels gives an a-posteriori error estimate.
"""

from __future__ import annotations

from abc import ABC, abstractmethod
from functools import lru_cache
from typing import Dict, Tuple

import mpmath
from mpmath.calculus.quadrature import GaussLegendre

from src.core.exceptions import ConfigurationError

# (abscissa, weight) pairs as raw mpf tuples so any context can adopt them.
NodeTable = Tuple[Tuple[tuple, tuple], ...]


class QuadratureRule(ABC):
    """A family of node tables indexed by refinement level."""

    name: str = ""

    @abstractmethod
    def node_count(self, level: int) -> int:
        """Number of nodes used at `level`."""

    @abstractmethod
    def nodes(self, level: int, prec: int) -> NodeTable:
        """Nodes and weights on [-1, 1] at `prec` bits; built once per (level, prec)."""


@lru_cache(maxsize=64)
def _gauss_legendre_table(level: int, prec: int) -> NodeTable:
    ctx = mpmath.MPContext()
    ctx.prec = prec
    nodes = GaussLegendre(ctx).calc_nodes(level, prec)
    return tuple((ctx.mpf(x)._mpf_, ctx.mpf(w)._mpf_) for x, w in nodes)


@lru_cache(maxsize=64)
def _clenshaw_curtis_table(level: int, prec: int) -> NodeTable:
    ctx = mpmath.MPContext()
    ctx.prec = prec + 16
    n = 3 * 2 ** (level - 1)
    # cos(pi m / n) for m in [0, 2n); every cosine below is a lookup into it.
    cosines = [ctx.cospi(ctx.mpf(m) / n) for m in range(2 * n)]
    weights = [ctx.zero] * (n + 1)
    if n % 2 == 0:
        edge = ctx.one / (n * n - 1)
    else:
        edge = ctx.one / (n * n)
    weights[0] = weights[n] = edge
    for k in range(1, n):
        acc = ctx.one
        for j in range(1, n // 2 + 1):
            if n % 2 == 0 and j == n // 2:
                acc -= cosines[(2 * j * k) % (2 * n)] / (n * n - 1)
            else:
                acc -= 2 * cosines[(2 * j * k) % (2 * n)] / (4 * j * j - 1)
        weights[k] = 2 * acc / n
    table = []
    for k in range(n + 1):
        x = ctx.mpf(cosines[k])
        table.append((x._mpf_, weights[k]._mpf_))
    return tuple(table)


class GaussLegendreRule(QuadratureRule):
    """Reference rule: 3 * 2**(L-1) Gauss-Legendre nodes at level L."""

    name = "gauss-legendre"

    def node_count(self, level: int) -> int:
        return 3 * 2 ** (level - 1)

    def nodes(self, level: int, prec: int) -> NodeTable:
        return _gauss_legendre_table(level, prec)


class ClenshawCurtisRule(QuadratureRule):
    """Comparison rule: 3 * 2**(L-1) + 1 Chebyshev extreme points at level L (nested)."""

    name = "clenshaw-curtis"

    def node_count(self, level: int) -> int:
        return 3 * 2 ** (level - 1) + 1

    def nodes(self, level: int, prec: int) -> NodeTable:
        return _clenshaw_curtis_table(level, prec)


RULES: Dict[str, QuadratureRule] = {
    GaussLegendreRule.name: GaussLegendreRule(),
    ClenshawCurtisRule.name: ClenshawCurtisRule(),
}


def get_rule(name: str) -> QuadratureRule:
    try:
        return RULES[name]
    except KeyError as exc:
        raise ConfigurationError(f"unknown quadrature rule {name!r}; choose from {sorted(RULES)}") from exc
