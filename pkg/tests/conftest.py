"""Shared fixtures for the cauchykit test suite."""

from __future__ import annotations

import os
import tempfile

# Keep test runs from writing into logs/app of the working tree.
os.environ.setdefault("CAUCHYKIT_LOG_DIR", tempfile.mkdtemp(prefix="cauchykit-logs-"))

import pytest  # noqa: E402

from src.core.settings import get_settings  # noqa: E402
from src.exact.cauchy import cauchy_table  # noqa: E402


@pytest.fixture(scope="session")
def table():
    """Cross-checked c_0..c_40."""
    return cauchy_table(40)


@pytest.fixture(scope="session")
def table200():
    return cauchy_table(200)


@pytest.fixture
def fresh_settings():
    """Clear the settings cache around a test that changes the environment."""
    get_settings.cache_clear()
    yield get_settings
    get_settings.cache_clear()
