"""Arrangement service exceptions."""


class ArrangementError(Exception):
    """Base exception for point arrangement errors."""

    pass


class PointFileError(ArrangementError):
    """Raised when a point file cannot be read or parsed."""

    def __init__(self, message: str, line: int | None = None):
        super().__init__(f"line {line}: {message}" if line is not None else message)
        self.line = line


class DuplicatePointError(ArrangementError):
    """Raised when an arrangement lists the same projective point twice."""

    pass


class ResolutionInvariantError(ArrangementError):
    """Raised when computed resolution data violates sum, count or point-count identities."""

    pass
