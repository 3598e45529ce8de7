"""Serializable report records shared by every verification suite."""

from __future__ import annotations

from fractions import Fraction
import re
from typing import Any, Dict, Iterable, List, Optional, Union

from pydantic import BaseModel, Field, model_validator

from src import __version__
from src.core.exceptions import ConsistencyError
from src.quadrature.precision import BigFloat, format_mpf, format_rational

DECIMAL_DIGITS = 30


class ReportValue(BaseModel):
    """A number rendered as a decimal plus, for exact values, its lossless numerator/denominator."""

    decimal: str
    numerator: Optional[str] = None
    denominator: Optional[str] = None
    exact: bool = True

    @classmethod
    def of(cls, value: Union[Fraction, int], digits: int = DECIMAL_DIGITS) -> "ReportValue":
        exact = Fraction(value)
        return cls(
            decimal=format_rational(exact, digits),
            numerator=str(exact.numerator),
            denominator=str(exact.denominator),
        )

    @classmethod
    def approximate(cls, value: BigFloat, digits: int = DECIMAL_DIGITS) -> "ReportValue":
        return cls(decimal=format_mpf(value, digits), exact=False)

    def as_fraction(self) -> Fraction:
        if not self.exact or self.numerator is None or self.denominator is None:
            raise ConsistencyError(f"{self.decimal} is not an exact value")
        return Fraction(int(self.numerator), int(self.denominator))


class CaseRecord(BaseModel):
    """One evaluated instance of a suite: inputs, both sides, verdict and margin."""

    key: str
    inputs: Dict[str, Any] = Field(default_factory=dict)
    lhs: Optional[ReportValue] = None
    rhs: Optional[ReportValue] = None
    holds: bool
    margin: Optional[ReportValue] = None
    extras: Dict[str, Any] = Field(default_factory=dict)
    note: Optional[str] = None


def case_sort_key(key: str) -> tuple:
    """Natural ordering so that n=10 sorts after n=9."""
    parts = re.split(r"(\d+)", key)
    return tuple(int(part) if part.isdigit() else part for part in parts)


def case_key(**parts: Any) -> str:
    rendered = []
    for name, value in parts.items():
        if isinstance(value, (tuple, list)):
            value = "(" + ",".join(str(v) for v in value) + ")"
        rendered.append(f"{name}={value}")
    return " ".join(rendered)


class CheckReport(BaseModel):
    """Pass/fail record for one suite."""

    suite: str
    parameters: Dict[str, Any] = Field(default_factory=dict)
    cases: List[CaseRecord] = Field(default_factory=list)
    passed: int = 0
    failed: int = 0
    counterexamples: List[str] = Field(default_factory=list)
    seed: Optional[int] = None
    version: str = __version__

    @model_validator(mode="after")
    def _counts_match_cases(self) -> "CheckReport":
        if self.passed + self.failed != len(self.cases):
            raise ValueError(f"passed + failed = {self.passed + self.failed}, cases = {len(self.cases)}")
        failed_keys = {case.key for case in self.cases if not case.holds}
        stray = [key for key in self.counterexamples if key not in failed_keys]
        if stray:
            raise ValueError(f"counterexamples {stray} are not failed cases")
        return self

    @property
    def ok(self) -> bool:
        return self.failed == 0

    @classmethod
    def from_cases(
        cls,
        suite: str,
        cases: Iterable[CaseRecord],
        *,
        parameters: Optional[Dict[str, Any]] = None,
        seed: Optional[int] = None,
        sort: bool = True,
    ) -> "CheckReport":
        records = list(cases)
        if sort:
            records.sort(key=lambda case: case_sort_key(case.key))
        failed = [case.key for case in records if not case.holds]
        return cls(
            suite=suite,
            parameters=dict(parameters or {}),
            cases=records,
            passed=len(records) - len(failed),
            failed=len(failed),
            counterexamples=failed,
            seed=seed,
        )

    @classmethod
    def single(cls, suite: str, case: CaseRecord, **kwargs: Any) -> "CheckReport":
        return cls.from_cases(suite, [case], **kwargs)

    @classmethod
    def merge(
        cls,
        suite: str,
        reports: Iterable["CheckReport"],
        *,
        parameters: Optional[Dict[str, Any]] = None,
        seed: Optional[int] = None,
    ) -> "CheckReport":
        """Concatenate the cases of several reports; the result is ordered by case key."""
        cases: List[CaseRecord] = []
        for report in reports:
            cases.extend(report.cases)
        return cls.from_cases(suite, cases, parameters=parameters, seed=seed)


class VerificationReport(BaseModel):
    """Everything one `verify` run produced."""

    version: str = __version__
    seed: int
    suites: Dict[str, CheckReport] = Field(default_factory=dict)
    discrepancies: Dict[str, CheckReport] = Field(default_factory=dict)
    summary: Dict[str, int] = Field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(report.ok for report in self.suites.values())

    def summarize(self) -> "VerificationReport":
        self.summary = {
            "suites": len(self.suites),
            "cases": sum(len(report.cases) for report in self.suites.values()),
            "passed": sum(report.passed for report in self.suites.values()),
            "failed": sum(report.failed for report in self.suites.values()),
            "discrepancies": len(self.discrepancies),
        }
        return self
