"""Experiment harness exceptions."""


class HarnessError(Exception):
    """Base exception for command orchestration."""

    pass


class UsageError(HarnessError):
    """Raised when command arguments are out of range."""

    pass
