"""Capacity and precondition guardrails shared by the exact and numerical layers."""

from __future__ import annotations

import logging
from typing import Optional

from src.core.exceptions import CapacityError, ContractViolationError
from src.core.logging_config import get_logger
from src.core.settings import AppSettings, get_settings


class CapacityGuard:
    """Evaluates table bounds before expensive exact work starts."""

    def __init__(self, settings: AppSettings | None = None, logger: logging.Logger | None = None) -> None:
        self.settings = settings or get_settings()
        self.logger = logger or get_logger("core.guards")

    @property
    def table_bound(self) -> int:
        return self.settings.table_bound

    def validate_index(self, n: int, *, what: str = "index") -> int:
        if isinstance(n, bool) or not isinstance(n, int):
            raise ContractViolationError(f"{what} must be an int, got {type(n).__name__}")
        if n < 0:
            raise ContractViolationError(f"{what} must be non-negative, got {n}")
        return n

    def validate_table_size(self, n_max: int, *, bound: Optional[int] = None, what: str = "table") -> int:
        """Return n_max when it fits the configured bound; raise CapacityError otherwise."""
        self.validate_index(n_max, what=f"{what} size")
        limit = self.table_bound if bound is None else bound
        if n_max > limit:
            self.logger.warning("Capacity exceeded", extra={"what": what, "requested": n_max, "bound": limit})
            raise CapacityError(f"{what} of size {n_max} exceeds the configured bound {limit}")
        return n_max

    def validate_coverage(self, needed: int, available: int, *, what: str = "table") -> None:
        """Raise CapacityError when a table is shorter than an operation needs."""
        if needed > available:
            self.logger.warning("Table too short", extra={"what": what, "needed": needed, "available": available})
            raise CapacityError(f"{what} covers indices through {available}, operation needs {needed}")


def default_guard() -> CapacityGuard:
    return CapacityGuard()
