"""Envelope service exceptions."""


class EnvelopeError(Exception):
    """Base exception for envelope computations."""

    pass


class ReducednessError(EnvelopeError):
    """Raised when no invertible multiplication operator is found for a finite scheme."""

    pass


class ReducednessDisagreementError(ReducednessError):
    """Raised when two independent operator draws disagree about a finite scheme."""

    pass


class EnvelopeInvariantError(EnvelopeError):
    """Raised when an envelope chain violates containment or generating-degree rules."""

    pass
