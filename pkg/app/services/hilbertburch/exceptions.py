"""Hilbert-Burch service exceptions."""


class HilbertBurchError(Exception):
    """Base exception for Hilbert-Burch computations."""

    pass


class InvalidResolutionDataError(HilbertBurchError):
    """Raised when resolution data cannot be parsed or violates its identities."""

    pass


class NonPositiveDataError(HilbertBurchError):
    """Raised when an operation needs a_{k+1} < b_1 and the data is not positive."""

    pass


class DegenerateSampleError(HilbertBurchError):
    """Raised when a sampled Hilbert-Burch matrix has an identically zero minor."""

    pass
