import json
import logging

import pytest

from src.core.exceptions import ConfigurationError
from src.core.logging_config import ContextFormatter, JsonFormatter, get_logger, record_context


def make_record(**extra):
    record = logging.LogRecord("cauchykit.exact", logging.INFO, __file__, 1, "Routes agree", None, None)
    for key, value in extra.items():
        setattr(record, key, value)
    return record


def test_children_of_base_logger():
    assert get_logger("quadrature").name == "cauchykit.quadrature"
    assert get_logger().name == "cauchykit"
    assert get_logger().handlers


def test_context_excludes_standard_fields():
    assert record_context(make_record(n_max=6)) == {"n_max": 6}
    assert record_context(make_record()) == {}


def test_text_formatter_appends_context():
    line = ContextFormatter(fmt="%(name)s | %(message)s").format(make_record(n_max=6, bound=256))
    assert line == "cauchykit.exact | Routes agree | bound=256 n_max=6"


def test_json_formatter_lifts_context():
    payload = json.loads(JsonFormatter().format(make_record(level_index=4)))
    assert payload["message"] == "Routes agree"
    assert payload["logger"] == "cauchykit.exact"
    assert payload["level_index"] == 4


def test_log_format_setting(monkeypatch, fresh_settings):
    monkeypatch.setenv("CAUCHYKIT_LOG_FORMAT", "json")
    assert fresh_settings().log_format == "json"


def test_unknown_log_format(monkeypatch, fresh_settings):
    monkeypatch.setenv("CAUCHYKIT_LOG_FORMAT", "xml")
    with pytest.raises(ConfigurationError):
        fresh_settings()
