import pytest

from src.core.exceptions import ContractViolationError, DomainError
from src.inequalities.continuous import check_log_convexity_at, check_thm4_at
from src.inequalities.majorization import MajPair


@pytest.mark.parametrize("t", ["1/2", "1", "2"])
def test_majorization_holds_away_from_zero(t):
    report = check_thm4_at(MajPair.of((1, 1), (2, 0)), 0, t, "1e-12", 128)
    assert report.ok
    assert report.cases[0].extras["converged"] is True
    assert report.cases[0].lhs.exact is False


@pytest.mark.parametrize("ell,i", [(0, 0), (1, 1)])
def test_log_convexity_holds_away_from_zero(ell, i):
    assert check_log_convexity_at(ell, i, "1", "1e-12", 128).ok


def test_t_must_be_positive():
    with pytest.raises(DomainError):
        check_log_convexity_at(0, 0, 0, "1e-12", 128)


def test_pair_must_be_verified():
    with pytest.raises(ContractViolationError):
        check_thm4_at(MajPair.of((2, 0), (1, 1)), 0, 1, "1e-12", 128)
