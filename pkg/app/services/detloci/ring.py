"""The generic (k+1) x k matrix and the determinantal ideals built from it.

The polynomial ring has one variable x_ij per entry, indexed row-major:
x_ij sits at position (i-1)*k + (j-1). For k = 2 the six variables read as
the matrix ((a, b), (c, d), (e, f)).
"""

from __future__ import annotations

from functools import cached_property
from itertools import combinations

import numpy as np

from app.services.algebra import (
    FormMatrix,
    HomogeneousForm,
    PrimeField,
    determinant,
    form_eval,
    minor_determinant,
)
from app.services.detloci.exceptions import UnsupportedSizeError


class GenericMatrixRing:
    """Polynomial ring in the entries of a generic (k+1) x k matrix."""

    def __init__(self, k: int, field: PrimeField | None = None):
        if k < 1:
            raise UnsupportedSizeError(f"need k >= 1, got {k}")
        self.k = k
        self.field = field or PrimeField.default()

    @property
    def nvars(self) -> int:
        return self.k * (self.k + 1)

    def index(self, i: int, j: int) -> int:
        """Variable position of the 1-based entry (i, j)."""
        if not (1 <= i <= self.k + 1 and 1 <= j <= self.k):
            raise UnsupportedSizeError(f"entry ({i},{j}) outside a {self.k + 1}x{self.k} matrix")
        return (i - 1) * self.k + (j - 1)

    def variable(self, i: int, j: int) -> HomogeneousForm:
        return HomogeneousForm.variable(self.nvars, self.index(i, j), self.field)

    @cached_property
    def matrix(self) -> FormMatrix:
        entries = [[self.variable(i, j) for j in range(1, self.k + 1)] for i in range(1, self.k + 2)]
        return FormMatrix.build(entries, [0] * (self.k + 1), [1] * self.k)

    @cached_property
    def minors(self) -> tuple[HomogeneousForm, ...]:
        """F_1 .. F_{k+1}, F_i the determinant with row i deleted (no sign)."""
        return tuple(minor_determinant(self.matrix, i) for i in range(1, self.k + 2))

    def minor(self, i: int) -> HomogeneousForm:
        if not 1 <= i <= self.k + 1:
            raise UnsupportedSizeError(f"minor index {i} outside 1..{self.k + 1}")
        return self.minors[i - 1]

    def i_generators(self, r: int) -> tuple[HomogeneousForm, ...]:
        """F_1 .. F_r."""
        self.check_r(r)
        return self.minors[:r]

    def j_generators(self, r: int) -> tuple[HomogeneousForm, ...]:
        """Maximal minors of the last k+1-r rows; the constant 1 when r = k+1."""
        self.check_r(r)
        size = self.k + 1 - r
        if size == 0:
            return (HomogeneousForm.constant(self.nvars, 1, self.field),)
        rows = tuple(range(r, self.k + 1))
        generators = []
        for cols in combinations(range(self.k), size):
            entries = [[self.matrix.entries[i][j] for j in cols] for i in rows]
            block = FormMatrix.build(entries, [0] * size, [1] * size)
            generators.append(determinant(block))
        return tuple(generators)

    def evaluate(self, form: HomogeneousForm, point: np.ndarray) -> int:
        """Value of a form at a numeric (k+1) x k matrix."""
        point = np.asarray(point, dtype=np.int64)
        if point.shape != (self.k + 1, self.k):
            raise UnsupportedSizeError(f"expected a {self.k + 1}x{self.k} matrix, got {point.shape}")
        return int(form_eval(form, point.reshape(-1).tolist()))

    def check_r(self, r: int) -> None:
        if not 1 <= r <= self.k + 1:
            raise UnsupportedSizeError(f"r = {r} outside 1..{self.k + 1}")


def generic_F(k: int, i: int, field: PrimeField | None = None) -> HomogeneousForm:
    """Determinant of the generic matrix with row i deleted."""
    return GenericMatrixRing(k, field).minor(i)


def jr_generators(k: int, r: int, field: PrimeField | None = None) -> tuple[HomogeneousForm, ...]:
    """Generators of J_r; the unit ideal is returned as the single constant 1."""
    return GenericMatrixRing(k, field).j_generators(r)


def is_unit_ideal(generators: tuple[HomogeneousForm, ...]) -> bool:
    return any(g.degree == 0 and not g.is_zero() for g in generators)


def witness_A(k: int, r: int) -> np.ndarray:
    """Zero matrix with an identity of size k+1-r in the bottom-left corner.

    For r >= 2 the top r rows are zero, so at most k+1-r < k rows are nonzero
    and every maximal minor vanishes; some generator of J_r does not.
    """
    size = k + 1 - r
    point = np.zeros((k + 1, k), dtype=np.int64)
    point[r:, :size] = np.eye(size, dtype=np.int64)
    return point


def witness_B(k: int) -> np.ndarray:
    """The identity on top of a zero row: F_{k+1} = 1 and the last row vanishes."""
    return np.vstack([np.eye(k, dtype=np.int64), np.zeros((1, k), dtype=np.int64)])
