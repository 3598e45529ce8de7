"""Custom exception hierarchy for the cauchykit toolkit."""


class CauchyKitError(Exception):
    """Base exception for cauchykit."""


class ConfigurationError(CauchyKitError):
    """Raised when configuration values are missing or malformed."""


class CapacityError(CauchyKitError):
    """Raised when a request exceeds a configured table or search bound."""


class DomainError(CauchyKitError, ValueError):
    """Raised when a parameter lies outside the mathematical domain of an operation."""


class ContractViolationError(CauchyKitError, ValueError):
    """Raised when a caller breaks a precondition (negative index, unverified pair)."""


class RouteMismatchError(CauchyKitError):
    """Raised when the two exact routes for c_n disagree."""

    def __init__(self, message: str, *, index: int | None = None) -> None:
        super().__init__(message)
        self.index = index


class ConsistencyError(CauchyKitError):
    """Raised when an internal cross-check (e.g. recurrence vs binomial sum) fails."""
