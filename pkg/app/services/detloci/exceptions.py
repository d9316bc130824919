"""Determinantal loci service exceptions."""


class DetLociError(Exception):
    """Base exception for determinantal-locus computations."""

    pass


class UnsupportedSizeError(DetLociError):
    """Raised when a generic matrix size or index is out of range."""

    pass
