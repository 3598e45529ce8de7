from fractions import Fraction

import pytest

from src.core.exceptions import ConfigurationError, DomainError
from src.exact.cauchy import cauchy_table
from src.quadrature.integrands import IntegrandSpec, transform_integrand
from src.quadrature.integrator import (
    compare_rules,
    eval_F,
    eval_h,
    eval_h_derivative,
    eval_h_general,
    eval_tail_moment,
    f_closed_form,
    integrate,
)
from src.quadrature.precision import (
    BigFloat,
    format_rational,
    mpf_to_fraction,
    parse_tolerance,
    to_mpf,
    working_context,
)
from src.quadrature.rules import get_rule

PRECISION = 128


def close(value, exact, within):
    ctx = working_context(PRECISION)
    return abs(to_mpf(ctx, value) - to_mpf(ctx, exact)) <= to_mpf(ctx, within)


def test_working_context_is_private():
    ctx = working_context(128)
    assert ctx.prec == 160
    with pytest.raises(DomainError):
        working_context(32)


def test_tolerance_parsing():
    assert parse_tolerance("1e-12") == Fraction(1, 10**12)
    with pytest.raises(DomainError):
        parse_tolerance("0")
    with pytest.raises(DomainError):
        parse_tolerance("-1e-3")


def test_private_context_values_are_big_floats():
    low, high = working_context(64), working_context(256)
    value = high.mpf(1) / 3
    assert isinstance(value, BigFloat)
    assert isinstance(to_mpf(low, value), BigFloat)
    assert type(to_mpf(low, value)) is low.mpf


def test_mpf_to_fraction_is_exact():
    ctx = working_context(64)
    assert mpf_to_fraction(ctx.mpf(3) / 4) == Fraction(3, 4)


def test_format_rational():
    assert format_rational(Fraction(1, 2), 10).startswith("0.5")
    assert format_rational(Fraction(5, 12), 10).startswith("0.41666666")


def test_unknown_rule():
    with pytest.raises(ConfigurationError):
        get_rule("simpson")


def test_integrand_domains():
    with pytest.raises(DomainError):
        IntegrandSpec.f_at(-1)
    with pytest.raises(DomainError):
        IntegrandSpec.h_at(1, -1)
    with pytest.raises(DomainError):
        IntegrandSpec.h_general(-1, 0)
    with pytest.raises(DomainError):
        IntegrandSpec.cauchy_moment(-2)


def test_transformed_integrand_at_zero():
    ctx = working_context(PRECISION)
    f = transform_integrand(IntegrandSpec.cauchy_moment(1), ctx)
    # theta = 0 is w = 1, where the integrand is g(1) / pi
    value = f(ctx.zero)
    assert abs(value - 1 / (2 * ctx.pi)) < ctx.mpf(10) ** -30


def test_transformed_integrand_is_finite_near_endpoints():
    ctx = working_context(PRECISION)
    f = transform_integrand(IntegrandSpec.cauchy_moment(3), ctx)
    for theta in (ctx.pi / 2 - ctx.mpf(10) ** -15, -ctx.pi / 2 + ctx.mpf(10) ** -15):
        value = f(theta)
        assert ctx.isfinite(value)
        assert value >= 0


@pytest.mark.parametrize("n", [0, 1, 2, 4])
def test_integrate_small_moments(n):
    result = integrate(IntegrandSpec.cauchy_moment(n), "1e-13", PRECISION)
    assert result.converged
    assert result.rule == "gauss-legendre"
    assert close(result.value, cauchy_table(4).mu[n], Fraction(1, 10**12))


@pytest.mark.slow
def test_integrate_moments_through_30():
    table = cauchy_table(30)
    for n in range(31):
        result = integrate(IntegrandSpec.cauchy_moment(n), "1e-12", PRECISION)
        assert result.converged, n
        assert close(result.value, table.mu[n], Fraction(1, 10**11)), n


def test_rules_agree():
    results = compare_rules(IntegrandSpec.cauchy_moment(2), "1e-12", PRECISION)
    assert set(results) == {"gauss-legendre", "clenshaw-curtis"}
    for result in results.values():
        assert result.converged
        assert close(result.value, Fraction(5, 12), Fraction(1, 10**11))


def test_bad_level_range():
    with pytest.raises(DomainError):
        integrate(IntegrandSpec.cauchy_moment(1), "1e-12", PRECISION, min_level=4, max_level=4)


def test_non_convergence_is_reported():
    result = integrate(IntegrandSpec.cauchy_moment(5), "1e-30", PRECISION, min_level=1, max_level=2)
    assert not result.converged
    assert result.error_estimate > 0


@pytest.mark.parametrize("z", ["-9/10", "-1/2", "1/10", "1", "10", "1000"])
def test_F_matches_closed_form(z):
    result = eval_F(z, "1e-12", PRECISION)
    assert result.converged
    ctx = working_context(PRECISION)
    closed = f_closed_form(z, PRECISION)
    assert abs(to_mpf(ctx, result.value) - to_mpf(ctx, closed)) <= to_mpf(ctx, Fraction(1, 10**11))


def test_F_closed_form_values():
    assert f_closed_form(0, PRECISION) == 1
    assert str(f_closed_form(1, PRECISION)).startswith("0.72134752044448")
    with pytest.raises(DomainError):
        f_closed_form(-1, PRECISION)


def test_h_at_zero_is_the_moment():
    result = eval_h(3, 0, "1e-13", PRECISION)
    assert close(result.value, Fraction(3, 8), Fraction(1, 10**12))


HGRID = ("0", "1/2", "1", "2", "4")


@pytest.fixture(scope="module")
def h_grid():
    ctx = working_context(PRECISION)
    return {
        (n, t): to_mpf(ctx, eval_h(n, t, "1e-13", PRECISION).value) for n in range(11) for t in HGRID
    }


@pytest.mark.parametrize("n", range(11))
def test_h_decreases_in_t(h_grid, n):
    values = [h_grid[n, t] for t in HGRID]
    assert all(left > right for left, right in zip(values, values[1:]))
    assert all(value > 0 for value in values)


@pytest.mark.parametrize("t", HGRID)
def test_h_decreases_in_n(h_grid, t):
    values = [h_grid[n, t] for n in range(11)]
    assert all(left > right for left, right in zip(values, values[1:]))


def test_general_h_matches_integer_order():
    integer = eval_h(2, "1/2", "1e-13", PRECISION)
    general = eval_h_general(2, "1/2", "1e-13", PRECISION)
    ctx = working_context(PRECISION)
    assert abs(to_mpf(ctx, integer.value) - to_mpf(ctx, general.value)) <= to_mpf(ctx, Fraction(1, 10**12))


def test_general_h_between_integer_orders():
    ctx = working_context(PRECISION)
    half = to_mpf(ctx, eval_h_general("1/2", 0, "1e-12", PRECISION).value)
    assert to_mpf(ctx, Fraction(1, 2)) < half < 1


@pytest.mark.parametrize("start, step", [("0", "1/2"), ("1/3", "1"), ("2", "1/4")])
@pytest.mark.parametrize("t", ["0", "1"])
def test_general_h_alternating_differences_in_s(start, step, t):
    ctx = working_context(PRECISION)
    points = [Fraction(start) + j * Fraction(step) for j in range(5)]
    row = [to_mpf(ctx, eval_h_general(s, t, "1e-14", PRECISION).value) for s in points]
    for order in range(1, len(points)):
        row = [right - left for left, right in zip(row, row[1:])]
        signed = [(-1) ** order * value for value in row]
        assert all(value > 0 for value in signed), (order, signed)


def test_derivative_identity_at_zero():
    first = eval_h_derivative(1, 1, 0, "1e-13", PRECISION)
    assert close(first.value, Fraction(-5, 6), Fraction(1, 10**12))
    second = eval_h_derivative(0, 2, 0, "1e-13", PRECISION)
    assert close(second.value, Fraction(5, 6), Fraction(1, 10**12))


@pytest.mark.parametrize("ell", range(6))
def test_derivative_matches_central_difference(ell):
    ctx = working_context(PRECISION)
    step = Fraction(1, 10**4)
    upper = to_mpf(ctx, eval_h(ell, 1 + step, "1e-13", PRECISION).value)
    lower = to_mpf(ctx, eval_h(ell, 1 - step, "1e-13", PRECISION).value)
    numeric = (upper - lower) / (2 * to_mpf(ctx, step))
    exact = to_mpf(ctx, eval_h_derivative(ell, 1, 1, "1e-13", PRECISION).value)
    assert abs(numeric - exact) < ctx.mpf(10) ** -6


def test_derivative_rejects_negative_order():
    with pytest.raises(DomainError):
        eval_h_derivative(0, -1, 0, "1e-12", PRECISION)


def test_tail_moment_first_orders():
    assert close(eval_tail_moment(0, "1e-13", PRECISION).value, 1, Fraction(1, 10**12))
    assert close(eval_tail_moment(1, "1e-13", PRECISION).value, Fraction(1, 2), Fraction(1, 10**12))
    assert close(eval_tail_moment(2, "1e-13", PRECISION).value, Fraction(5, 12), Fraction(1, 10**12))
