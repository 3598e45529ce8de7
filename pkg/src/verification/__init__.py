"""Verification suites and their orchestration."""

from src.verification.service import SUITES, VerificationConfig, VerificationService, resolve_suites

__all__ = ["SUITES", "VerificationConfig", "VerificationService", "resolve_suites"]
