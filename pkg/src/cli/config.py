"""Parsed command-line invocation."""

from __future__ import annotations

import argparse
from typing import Any, Dict, List, Literal, Optional

from pydantic import BaseModel, Field, field_validator

from src.core.settings import AppSettings, get_settings
from src.exact.factorials import as_rational
from src.quadrature.precision import MIN_PRECISION, parse_tolerance
from src.quadrature.rules import RULES


class RunConfig(BaseModel):
    """Every field has a default; flags override environment, which overrides configs/."""

    command: Literal["compute", "quad", "verify", "eval", "schema"]
    kind: Optional[Literal["F", "h", "hs"]] = None
    n_max: int = Field(default=10, ge=0)
    n: Optional[int] = Field(default=None, ge=0)
    tol: str = "1e-12"
    precision: int = Field(default=128, ge=MIN_PRECISION)
    format: Literal["plain", "csv", "json"] = "plain"
    suites: List[str] = Field(default_factory=lambda: ["all"])
    epsilons: List[str] = Field(default_factory=list)
    depth: Optional[int] = Field(default=None, ge=0)
    seed: Optional[int] = None
    n_bound: Optional[int] = Field(default=None, ge=2)
    table_bound: int = Field(default=256, ge=0)
    rule: str = "gauss-legendre"
    z: Optional[str] = None
    t: Optional[str] = None
    s: Optional[str] = None
    out: Optional[str] = None

    @field_validator("tol")
    @classmethod
    def _exact_tolerance(cls, value: str) -> str:
        parse_tolerance(value)
        return value

    @field_validator("epsilons")
    @classmethod
    def _exact_epsilons(cls, values: List[str]) -> List[str]:
        for value in values:
            as_rational(value)
        return values

    @field_validator("z", "t", "s")
    @classmethod
    def _exact_scalar(cls, value: Optional[str]) -> Optional[str]:
        if value is not None:
            as_rational(value)
        return value

    @field_validator("rule")
    @classmethod
    def _known_rule(cls, value: str) -> str:
        if value not in RULES:
            raise ValueError(f"unknown rule {value!r}; choose from {sorted(RULES)}")
        return value

    def canonical(self) -> Dict[str, Any]:
        """Plain-data form; RunConfig(**config.canonical()) == config."""
        return dict(sorted(self.model_dump(mode="json").items()))

    @classmethod
    def from_namespace(cls, args: argparse.Namespace, settings: AppSettings | None = None) -> "RunConfig":
        settings = settings or get_settings()
        values = {key: value for key, value in vars(args).items() if value is not None}
        values.setdefault("tol", settings.quadrature.tolerance)
        values.setdefault("precision", settings.quadrature.precision)
        values.setdefault("table_bound", settings.table_bound)
        values.setdefault("rule", settings.quadrature.rule)
        return cls(**values)
