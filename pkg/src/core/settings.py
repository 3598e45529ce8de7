"""Centralized application settings and configuration loaders."""

from __future__ import annotations

from functools import lru_cache
import os
from pathlib import Path
from typing import Any, Dict, List, Literal

import yaml
from dotenv import load_dotenv
from pydantic import BaseModel, Field

from src.core.exceptions import ConfigurationError


def _project_root() -> Path:
    return Path(__file__).resolve().parents[2]


class PathSettings(BaseModel):
    """Common filesystem locations."""

    root: Path = Field(default_factory=_project_root)
    config_dir: Path = Field(default_factory=lambda: _project_root() / "configs")
    log_dir: Path = Field(default_factory=lambda: _project_root() / "logs" / "app")
    schema_dir: Path = Field(default_factory=lambda: _project_root() / "schemas")


class TableSettings(BaseModel):
    """Bounds for the exact tables."""

    bound: int = Field(default=256, ge=0, description="Largest index a table may hold without opt-in.")


class QuadratureSettings(BaseModel):
    """Defaults for the numerical oracle."""

    precision: int = Field(default=128, ge=64, description="Requested precision in bits.")
    guard_bits: int = Field(default=32, ge=0, description="Extra working bits on top of the request.")
    tolerance: str = Field(default="1e-12", description="Default tolerance, parsed exactly.")
    rule: str = Field(default="gauss-legendre")
    min_level: int = Field(default=3, ge=1)
    max_level: int = Field(default=10, ge=2)
    verified_moment_bound: int = Field(default=30, ge=0)


class VerificationSettings(BaseModel):
    """Bounds of the exhaustive and random verification sweeps."""

    seed: int = 20140101
    n_bound: int = 30
    route_bound: int = 200
    cm_depth: int = 60
    moment_check_depth: int = 10
    minimality_depth: int = 200
    minimality_epsilons: List[str] = Field(default_factory=lambda: ["3/4", "1/10", "1/100", "1/1000"])
    witness_k_max: int = 100000
    witness_tolerance: str = "1e-10"
    thm3_n: int = 6
    thm3_m: int = 4
    thm3_entry: int = 4
    majorization_m: int = 3
    majorization_entry: int = 6
    thm4_shifts: List[int] = Field(default_factory=lambda: [0, 1, 2])
    power_ell: int = 3
    power_n: int = 8
    thm5_ell: int = 3
    thm5_n: int = 8
    thm6_nm: int = 5
    thm6_ell: int = 3
    thm7_product_m: int = 3
    thm7_det_m: int = 4
    thm7_entry: int = 4
    random_chains: int = 25
    f_points: List[str] = Field(default_factory=lambda: ["-9/10", "-1/2", "1/10", "1", "10", "1000"])
    continuous_points: List[str] = Field(default_factory=lambda: ["1/2", "1", "2"])


class AppSettings(BaseModel):
    """Primary application configuration container."""

    log_level: str = Field(default="INFO")
    log_format: Literal["text", "json"] = Field(default="text", description="Format of the rotating log file.")
    tables: TableSettings = Field(default_factory=TableSettings)
    quadrature: QuadratureSettings = Field(default_factory=QuadratureSettings)
    verification: VerificationSettings = Field(default_factory=VerificationSettings)
    paths: PathSettings = Field(default_factory=PathSettings)

    @property
    def table_bound(self) -> int:
        """Shortcut to the exact-table capacity."""
        return self.tables.bound


def _load_yaml(path: Path) -> Dict[str, Any]:
    if not path.exists():
        return {}
    with path.open("r", encoding="utf-8") as handle:
        return yaml.safe_load(handle) or {}


def _env_int(name: str) -> int | None:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return None
    try:
        return int(raw)
    except ValueError as exc:
        raise ConfigurationError(f"{name} must be an integer, got {raw!r}") from exc


@lru_cache(maxsize=1)
def get_settings() -> AppSettings:
    """Load and cache application settings."""
    load_dotenv()
    paths = PathSettings()
    log_dir = os.getenv("CAUCHYKIT_LOG_DIR")
    if log_dir:
        paths.log_dir = Path(log_dir)

    tables = dict(_load_yaml(paths.config_dir / "tables.yaml"))
    quadrature = dict(_load_yaml(paths.config_dir / "quadrature.yaml"))
    verification = dict(_load_yaml(paths.config_dir / "verification.yaml"))

    bound = _env_int("CAUCHYKIT_TABLE_BOUND")
    if bound is not None:
        tables["bound"] = bound
    precision = _env_int("CAUCHYKIT_PRECISION")
    if precision is not None:
        quadrature["precision"] = precision

    try:
        return AppSettings(
            log_level=os.getenv("CAUCHYKIT_LOG_LEVEL", "INFO"),
            log_format=os.getenv("CAUCHYKIT_LOG_FORMAT", "text"),
            tables=TableSettings(**tables),
            quadrature=QuadratureSettings(**quadrature),
            verification=VerificationSettings(**verification),
            paths=paths,
        )
    except ValueError as exc:
        raise ConfigurationError(f"Invalid configuration: {exc}") from exc
