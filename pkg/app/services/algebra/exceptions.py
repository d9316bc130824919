"""Algebra service exceptions."""


class AlgebraError(Exception):
    """Base exception for exact-arithmetic errors."""

    pass


class FieldMismatchError(AlgebraError):
    """Raised when operands live over different prime fields or variable counts."""

    pass


class DegenerateInputError(AlgebraError):
    """Raised when a form matrix violates its degree bookkeeping."""

    pass
