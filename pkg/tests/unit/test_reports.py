from fractions import Fraction
import json
from pathlib import Path

import pydantic
import pytest

from src.core.exceptions import ConfigurationError, ConsistencyError
from src.quadrature.precision import working_context
from src.reports.models import CaseRecord, CheckReport, ReportValue, VerificationReport, case_key, case_sort_key
from src.reports.storage import ReportWriter, case_rows, plain_summary, to_csv, to_json

SCHEMA_PATH = Path(__file__).resolve().parents[2] / "schemas" / "verification_report.schema.json"


def make_case(key, holds=True):
    return CaseRecord(key=key, holds=holds, margin=ReportValue.of(Fraction(1 if holds else -1, 3)))


def test_report_value_is_lossless():
    value = ReportValue.of(Fraction(-7, 12))
    assert (value.numerator, value.denominator) == ("-7", "12")
    assert value.decimal.startswith("-0.58333")
    assert value.as_fraction() == Fraction(-7, 12)


def test_approximate_value_has_no_fraction():
    ctx = working_context(64)
    value = ReportValue.approximate(ctx.mpf(1) / 3)
    assert value.exact is False
    with pytest.raises(ConsistencyError):
        value.as_fraction()


def test_case_keys():
    assert case_key(m=1, n=1, a=(0,)) == "m=1 n=1 a=(0)"
    keys = ["n=10", "n=9", "n=2"]
    assert sorted(keys, key=case_sort_key) == ["n=2", "n=9", "n=10"]


def test_from_cases_counts_and_orders():
    report = CheckReport.from_cases("demo", [make_case("n=10", False), make_case("n=2")])
    assert [case.key for case in report.cases] == ["n=2", "n=10"]
    assert (report.passed, report.failed) == (1, 1)
    assert report.counterexamples == ["n=10"]
    assert not report.ok


def test_counts_are_validated():
    with pytest.raises(pydantic.ValidationError):
        CheckReport(suite="demo", cases=[make_case("n=0")], passed=0, failed=0)
    with pytest.raises(pydantic.ValidationError):
        CheckReport(suite="demo", cases=[make_case("n=0")], passed=1, counterexamples=["n=0"])


def test_merge_sorts_across_reports():
    first = CheckReport.single("demo", make_case("n=3"))
    second = CheckReport.single("demo", make_case("n=1"))
    merged = CheckReport.merge("demo", [first, second], parameters={"n": 3})
    assert [case.key for case in merged.cases] == ["n=1", "n=3"]
    assert merged.parameters == {"n": 3}


def test_verification_summary_ignores_discrepancies():
    report = VerificationReport(
        seed=1,
        suites={"demo": CheckReport.single("demo", make_case("n=0"))},
        discrepancies={"literal": CheckReport.single("literal", make_case("n=0", False))},
    ).summarize()
    assert report.ok
    assert report.summary == {"suites": 1, "cases": 1, "passed": 1, "failed": 0, "discrepancies": 1}


def test_json_is_deterministic():
    report = CheckReport.single("demo", make_case("n=0"))
    assert to_json(report) == to_json(report)
    assert json.loads(to_json(report))["suite"] == "demo"


def test_csv_rows():
    report = CheckReport.from_cases("demo", [make_case("n=0"), make_case("n=1", False)])
    rows = case_rows(report)
    assert rows[1]["margin_exact"] == "-1/3"
    text = to_csv(rows)
    assert text.splitlines()[0] == "suite,key,holds,lhs,rhs,margin,margin_exact,note"
    assert len(text.splitlines()) == 3


def test_plain_summary_lists_counterexamples():
    report = CheckReport.from_cases("demo", [make_case("n=1", False)])
    assert "counterexamples: n=1" in plain_summary(report)


def test_writer_rejects_unknown_format():
    with pytest.raises(ConfigurationError):
        ReportWriter(fmt="xml")


def test_writer_emits_to_file(tmp_path):
    target = tmp_path / "nested" / "report.json"
    writer = ReportWriter(fmt="json", out=target)
    assert writer.emit("{}\n") == target
    assert target.read_text(encoding="utf-8") == "{}\n"


def test_schema_file_matches_models():
    stored = json.loads(SCHEMA_PATH.read_text(encoding="utf-8"))
    assert stored == VerificationReport.model_json_schema()
