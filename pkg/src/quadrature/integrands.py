"""Integrand specifications and their bounded form on (-pi/2, pi/2).

Every integrand of interest has the shape

    integral_0^inf  g(u) du / (u [pi^2 + (ln u)^2]).

With u = e^v and v = pi tan(theta) the Cauchy weight is absorbed exactly,
leaving (1/pi) integral_{-pi/2}^{pi/2} g(e^{pi tan theta}) d theta.
All kinds below are evaluated in log space, so e^{pi tan theta} is never
formed for large arguments; past a kind-specific cutoff the integrand is
replaced by its one-sided limit, which agrees with it to working precision.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Callable, Optional

import mpmath

from src.core.exceptions import DomainError
from src.exact.factorials import RationalLike, as_rational
from src.quadrature.precision import BigFloat, to_mpf


class IntegrandKind(str, Enum):
    CAUCHY_MOMENT = "cauchy_moment"
    F_AT = "F_at"
    H_AT = "h_at"
    H_GENERAL = "h_general"
    TAIL_MOMENT = "tail_moment"


@dataclass(frozen=True)
class IntegrandSpec:
    """One integrand and its exact parameters.

    cauchy_moment(n):  (1+w)^(-n)                   -> c_n / n!
    F_at(z):           (w+1) / (w+1+z)               -> F(z)
    h_at(n, t):        (w+1) / (w+1+t)^(n+1)         -> h_n(t)
    h_general(s, t):   (w+1) / (w+1+t)^(s+1)         -> h(t; s)
    tail_moment(k):    (w / (1+w))^k                 -> (-1)^k Delta^k mu_0
    """

    kind: IntegrandKind
    n: Optional[int] = None
    s: Optional[Fraction] = None
    t: Optional[Fraction] = None
    z: Optional[Fraction] = None

    @classmethod
    def cauchy_moment(cls, n: int) -> "IntegrandSpec":
        return cls(IntegrandKind.CAUCHY_MOMENT, n=n).validated()

    @classmethod
    def f_at(cls, z: RationalLike) -> "IntegrandSpec":
        return cls(IntegrandKind.F_AT, z=as_rational(z)).validated()

    @classmethod
    def h_at(cls, n: int, t: RationalLike) -> "IntegrandSpec":
        return cls(IntegrandKind.H_AT, n=n, t=as_rational(t)).validated()

    @classmethod
    def h_general(cls, s: RationalLike, t: RationalLike) -> "IntegrandSpec":
        return cls(IntegrandKind.H_GENERAL, s=as_rational(s), t=as_rational(t)).validated()

    @classmethod
    def tail_moment(cls, k: int) -> "IntegrandSpec":
        return cls(IntegrandKind.TAIL_MOMENT, n=k).validated()

    @property
    def exponent(self) -> Fraction:
        """The power s in (w+1+t)^(s+1) for the h kinds, n for the moment kinds."""
        if self.kind in (IntegrandKind.H_AT, IntegrandKind.CAUCHY_MOMENT, IntegrandKind.TAIL_MOMENT):
            return Fraction(self.n)
        if self.kind is IntegrandKind.H_GENERAL:
            return self.s
        return Fraction(0)

    def validated(self) -> "IntegrandSpec":
        kind = self.kind
        if kind in (IntegrandKind.CAUCHY_MOMENT, IntegrandKind.H_AT, IntegrandKind.TAIL_MOMENT):
            if isinstance(self.n, bool) or not isinstance(self.n, int) or self.n < 0:
                raise DomainError(f"{kind.value} requires an integer order >= 0, got {self.n!r}")
        if kind in (IntegrandKind.H_AT, IntegrandKind.H_GENERAL) and (self.t is None or self.t < 0):
            raise DomainError(f"{kind.value} requires t >= 0, got {self.t}")
        if kind is IntegrandKind.H_GENERAL and (self.s is None or self.s < 0):
            raise DomainError(f"h_general requires s >= 0, got {self.s}")
        if kind is IntegrandKind.F_AT and (self.z is None or self.z <= -1):
            raise DomainError(f"F_at requires real z > -1, got {self.z}")
        return self

    def describe(self) -> str:
        if self.kind is IntegrandKind.F_AT:
            return f"F_at(z={self.z})"
        if self.kind is IntegrandKind.H_GENERAL:
            return f"h_general(s={self.s}, t={self.t})"
        if self.kind is IntegrandKind.H_AT:
            return f"h_at(n={self.n}, t={self.t})"
        return f"{self.kind.value}({self.n})"


def _log1pexp(ctx: mpmath.MPContext, v: BigFloat) -> BigFloat:
    """log(1 + e^v) without forming e^v for positive v."""
    if v > 0:
        return v + ctx.log1p(ctx.exp(-v))
    return ctx.log1p(ctx.exp(v))


def _cutoff(ctx: mpmath.MPContext, spec: IntegrandSpec) -> BigFloat:
    """|v| beyond which the integrand equals its endpoint limit to working precision."""
    scale = max(abs(p) for p in (spec.n or 0, spec.s or 0, spec.t or 0, spec.z or 0))
    base = (ctx.prec + 8) * ctx.ln2 + ctx.log(2 + to_mpf(ctx, Fraction(scale)))
    if spec.kind is IntegrandKind.H_GENERAL and 0 < spec.s < 1:
        # the +inf tail decays like e^{-s v}
        return base / to_mpf(ctx, spec.s)
    return base


def _upper_limit(ctx: mpmath.MPContext, spec: IntegrandSpec) -> BigFloat:
    """Limit as theta -> +pi/2 (w -> inf)."""
    if spec.kind in (IntegrandKind.F_AT, IntegrandKind.TAIL_MOMENT):
        return ctx.one
    return ctx.one if spec.exponent == 0 else ctx.zero


def _lower_limit(ctx: mpmath.MPContext, spec: IntegrandSpec) -> BigFloat:
    """Limit as theta -> -pi/2 (w -> 0)."""
    if spec.kind is IntegrandKind.CAUCHY_MOMENT:
        return ctx.one
    if spec.kind is IntegrandKind.TAIL_MOMENT:
        return ctx.one if spec.n == 0 else ctx.zero
    if spec.kind is IntegrandKind.F_AT:
        return ctx.one / (1 + to_mpf(ctx, spec.z))
    return ctx.power(1 + to_mpf(ctx, spec.t), -(to_mpf(ctx, spec.exponent) + 1))


def transform_integrand(spec: IntegrandSpec, ctx: mpmath.MPContext) -> Callable[[BigFloat], BigFloat]:
    """Return theta -> (1/pi) g(e^{pi tan theta}), finite on the closed interval [-pi/2, pi/2]."""
    spec.validated()
    inv_pi = 1 / ctx.pi
    cutoff = _cutoff(ctx, spec)
    upper = _upper_limit(ctx, spec) * inv_pi
    lower = _lower_limit(ctx, spec) * inv_pi
    kind = spec.kind

    if kind is IntegrandKind.CAUCHY_MOMENT:
        n = spec.n

        def body(v: BigFloat) -> BigFloat:
            if n == 0:
                return ctx.one
            return ctx.exp(-n * _log1pexp(ctx, v))

    elif kind is IntegrandKind.F_AT:
        z = to_mpf(ctx, spec.z)

        def body(v: BigFloat) -> BigFloat:
            if v > 0:
                e = ctx.exp(-v)
                return (1 + e) / (1 + (1 + z) * e)
            w = ctx.exp(v)
            return (w + 1) / (w + 1 + z)

    elif kind in (IntegrandKind.H_AT, IntegrandKind.H_GENERAL):
        t = to_mpf(ctx, spec.t)
        power = to_mpf(ctx, spec.exponent) + 1

        def body(v: BigFloat) -> BigFloat:
            if v > 0:
                log_shifted = v + ctx.log1p((1 + t) * ctx.exp(-v))
            else:
                log_shifted = ctx.log(1 + t + ctx.exp(v))
            return ctx.exp(_log1pexp(ctx, v) - power * log_shifted)

    else:
        k = spec.n

        def body(v: BigFloat) -> BigFloat:
            if k == 0:
                return ctx.one
            return ctx.exp(-k * _log1pexp(ctx, -v))

    def integrand(theta: BigFloat) -> BigFloat:
        cos_theta = ctx.cos(theta)
        if cos_theta == 0:
            return upper if theta > 0 else lower
        v = ctx.pi * ctx.sin(theta) / cos_theta
        if v > cutoff:
            return upper
        if v < -cutoff:
            return lower
        return body(v) * inv_pi

    return integrand
