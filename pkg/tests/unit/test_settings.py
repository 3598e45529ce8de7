import pytest

from src.core.exceptions import CapacityError, ConfigurationError, ContractViolationError
from src.core.guards import CapacityGuard
from src.core.settings import AppSettings, TableSettings


def test_defaults_from_configs(fresh_settings):
    settings = fresh_settings()
    assert settings.table_bound == 256
    assert settings.quadrature.precision >= 64
    assert settings.quadrature.rule == "gauss-legendre"
    assert settings.verification.minimality_depth == 200


def test_environment_overrides_table_bound(monkeypatch, fresh_settings):
    monkeypatch.setenv("CAUCHYKIT_TABLE_BOUND", "300")
    assert fresh_settings().table_bound == 300


def test_environment_overrides_precision(monkeypatch, fresh_settings):
    monkeypatch.setenv("CAUCHYKIT_PRECISION", "256")
    assert fresh_settings().quadrature.precision == 256


def test_non_integer_environment_is_a_configuration_error(monkeypatch, fresh_settings):
    monkeypatch.setenv("CAUCHYKIT_TABLE_BOUND", "lots")
    with pytest.raises(ConfigurationError):
        fresh_settings()


def test_precision_below_minimum_is_a_configuration_error(monkeypatch, fresh_settings):
    monkeypatch.setenv("CAUCHYKIT_PRECISION", "32")
    with pytest.raises(ConfigurationError):
        fresh_settings()


def test_guard_uses_injected_settings():
    guard = CapacityGuard(settings=AppSettings(tables=TableSettings(bound=10)))
    assert guard.validate_table_size(10) == 10
    with pytest.raises(CapacityError):
        guard.validate_table_size(11)
    assert guard.validate_table_size(11, bound=20) == 11


def test_guard_rejects_bad_indices():
    guard = CapacityGuard()
    with pytest.raises(ContractViolationError):
        guard.validate_index(-1)
    with pytest.raises(ContractViolationError):
        guard.validate_index(True)


def test_guard_coverage():
    guard = CapacityGuard()
    guard.validate_coverage(5, 5)
    with pytest.raises(CapacityError):
        guard.validate_coverage(6, 5)
