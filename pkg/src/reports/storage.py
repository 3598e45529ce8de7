"""Rendering and persistence of tables and verification reports."""

from __future__ import annotations

import json
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, List, Optional, Union

import pandas as pd
from pydantic import BaseModel

from src.core.exceptions import ConfigurationError
from src.reports.models import CheckReport, ReportValue, VerificationReport

FORMATS = ("plain", "csv", "json")

CASE_COLUMNS = ["suite", "key", "holds", "lhs", "rhs", "margin", "margin_exact", "note"]


def _exact_text(value: Optional[ReportValue]) -> str:
    if value is None:
        return ""
    if not value.exact:
        return value.decimal
    if value.denominator == "1":
        return value.numerator
    return f"{value.numerator}/{value.denominator}"


def case_rows(report: Union[CheckReport, VerificationReport]) -> List[Dict[str, Any]]:
    """One row per case; a full run lists regular suites first, then discrepancies."""
    if isinstance(report, CheckReport):
        groups = [(report.suite, report)]
    else:
        groups = list(report.suites.items()) + [
            (f"discrepancy:{name}", item) for name, item in report.discrepancies.items()
        ]
    rows = []
    for suite, item in groups:
        for case in item.cases:
            rows.append(
                {
                    "suite": suite,
                    "key": case.key,
                    "holds": case.holds,
                    "lhs": case.lhs.decimal if case.lhs else "",
                    "rhs": case.rhs.decimal if case.rhs else "",
                    "margin": case.margin.decimal if case.margin else "",
                    "margin_exact": _exact_text(case.margin),
                    "note": case.note or "",
                }
            )
    return rows


def to_json(payload: Union[BaseModel, Dict[str, Any], List[Any]]) -> str:
    """Sorted keys and no timestamps, so equal inputs give byte-identical output."""
    if isinstance(payload, BaseModel):
        payload = payload.model_dump(mode="json")
    return json.dumps(payload, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def to_csv(rows: List[Dict[str, Any]], columns: Optional[List[str]] = None) -> str:
    frame = pd.DataFrame(rows, columns=columns)
    return frame.to_csv(index=False, lineterminator="\n")


def to_plain(rows: List[Dict[str, Any]], columns: Optional[List[str]] = None) -> str:
    if not rows:
        return "(no rows)\n"
    frame = pd.DataFrame(rows, columns=columns)
    return frame.to_string(index=False) + "\n"


@dataclass
class ReportWriter:
    """Writes to `out` when given, otherwise to stdout."""

    fmt: str = "plain"
    out: Optional[Path] = None

    def __post_init__(self) -> None:
        if self.fmt not in FORMATS:
            raise ConfigurationError(f"unknown format {self.fmt!r}; choose from {list(FORMATS)}")

    def render_rows(self, rows: List[Dict[str, Any]], payload: Any = None, *, header: str = "") -> str:
        if self.fmt == "json":
            return to_json(payload if payload is not None else rows)
        if self.fmt == "csv":
            return to_csv(rows)
        return (header + "\n" if header else "") + to_plain(rows)

    def render_report(self, report: Union[CheckReport, VerificationReport]) -> str:
        if self.fmt == "json":
            return to_json(report)
        rows = case_rows(report)
        if self.fmt == "csv":
            return to_csv(rows, CASE_COLUMNS)
        return plain_summary(report) + to_plain(rows, CASE_COLUMNS)

    def emit(self, text: str) -> Optional[Path]:
        if self.out is None:
            sys.stdout.write(text)
            sys.stdout.flush()
            return None
        self.out.parent.mkdir(parents=True, exist_ok=True)
        self.out.write_text(text, encoding="utf-8")
        return self.out


def plain_summary(report: Union[CheckReport, VerificationReport]) -> str:
    if isinstance(report, CheckReport):
        lines = [f"suite {report.suite}: passed={report.passed} failed={report.failed}"]
        if report.counterexamples:
            lines.append("counterexamples: " + "; ".join(report.counterexamples))
        return "\n".join(lines) + "\n"
    lines = [f"cauchykit {report.version} seed={report.seed}"]
    for name, item in report.suites.items():
        lines.append(f"  {name:<14} passed={item.passed:<5} failed={item.failed}")
    for name, item in report.discrepancies.items():
        lines.append(f"  discrepancy {name}: {item.failed} literal counterexample(s), first {item.counterexamples[:1]}")
    summary = report.summary
    lines.append(f"total passed={summary.get('passed', 0)} failed={summary.get('failed', 0)}")
    return "\n".join(lines) + "\n"
