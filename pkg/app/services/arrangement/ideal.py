"""Graded pieces of the ideal of a point arrangement."""

from __future__ import annotations

import numpy as np

from app.services.algebra import basis_size, monomial_values
from app.services.arrangement.points import Arrangement
from app.services.gradedla import GradedPiece, IdealSource, kernel_basis, rank


def evaluation_matrix(arrangement: Arrangement, d: int) -> np.ndarray:
    """Rows are points, columns are degree-d monomials."""
    return monomial_values(arrangement.coordinates(), 3, d, arrangement.field)


def ideal_piece(arrangement: Arrangement, d: int) -> GradedPiece:
    """I_d: the degree-d forms vanishing at every point."""
    if d < 0:
        raise ValueError(f"degree must be non-negative, got {d}")
    kernel = kernel_basis(
        evaluation_matrix(arrangement, d),
        arrangement.field.prime,
        columns=basis_size(3, d),
    )
    return GradedPiece.span(3, d, kernel, arrangement.field)


def hilbert_function(arrangement: Arrangement, e: int) -> int:
    """Rank of the evaluation matrix in degree e."""
    if e < 0:
        raise ValueError(f"degree must be non-negative, got {e}")
    return rank(evaluation_matrix(arrangement, e), arrangement.field.prime)


class PointIdeal:
    """The (saturated) ideal of an arrangement as an ideal source."""

    def __init__(self, arrangement: Arrangement):
        self.arrangement = arrangement
        self.nvars = 3
        self.field = arrangement.field
        self._pieces: dict[int, GradedPiece] = {}

    @property
    def n(self) -> int:
        return self.arrangement.n

    def piece(self, e: int) -> GradedPiece:
        if e not in self._pieces:
            self._pieces[e] = ideal_piece(self.arrangement, e)
        return self._pieces[e]


def as_source(target: Arrangement | IdealSource) -> IdealSource:
    """Wrap an arrangement in its point ideal; ideal sources pass through."""
    if isinstance(target, Arrangement):
        return PointIdeal(target)
    return target
