"""Graded linear algebra exceptions."""


class GradedAlgebraError(Exception):
    """Base exception for graded linear algebra errors."""

    pass


class NotStabilizedError(GradedAlgebraError):
    """Raised when a Hilbert window reaches its degree cap without stabilizing."""

    def __init__(self, message: str, values: list[int] | None = None):
        super().__init__(message)
        self.values = values or []


class SingularMatrixError(GradedAlgebraError):
    """Raised when a square matrix over F_p has no inverse."""

    pass
