"""Matrices of homogeneous forms and their determinants."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

from app.services.algebra.exceptions import DegenerateInputError
from app.services.algebra.field import PrimeField
from app.services.algebra.forms import HomogeneousForm


@dataclass(frozen=True)
class FormMatrix:
    """A grid of forms whose (i, j) entry has degree col_degrees[j] - row_degrees[i].

    For a Hilbert-Burch matrix the row degrees are the a_i and the column
    degrees the b_j.
    """

    entries: tuple[tuple[HomogeneousForm, ...], ...]
    row_degrees: tuple[int, ...]
    col_degrees: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.entries) != len(self.row_degrees):
            raise DegenerateInputError("row degree count does not match the number of rows")
        for i, row in enumerate(self.entries):
            if len(row) != len(self.col_degrees):
                raise DegenerateInputError(f"row {i + 1} has {len(row)} entries")
            for j, entry in enumerate(row):
                expected = self.col_degrees[j] - self.row_degrees[i]
                if entry.degree != expected:
                    raise DegenerateInputError(
                        f"entry ({i + 1},{j + 1}) has degree {entry.degree}, expected {expected}"
                    )

    @classmethod
    def build(
        cls,
        entries: Sequence[Sequence[HomogeneousForm]],
        row_degrees: Sequence[int],
        col_degrees: Sequence[int],
    ) -> FormMatrix:
        return cls(
            tuple(tuple(row) for row in entries),
            tuple(row_degrees),
            tuple(col_degrees),
        )

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.col_degrees)

    @property
    def nvars(self) -> int:
        return self.entries[0][0].nvars

    @property
    def field(self) -> PrimeField:
        return self.entries[0][0].field

    def entry(self, i: int, j: int) -> HomogeneousForm:
        """Entry at 1-based position (i, j)."""
        return self.entries[i - 1][j - 1]

    def entry_degrees(self) -> list[list[int]]:
        return [[b - a for b in self.col_degrees] for a in self.row_degrees]


def _expand(
    matrix: FormMatrix,
    rows: tuple[int, ...],
    cols: tuple[int, ...],
    memo: dict[tuple[tuple[int, ...], tuple[int, ...]], HomogeneousForm],
) -> HomogeneousForm:
    """Determinant of the submatrix on (rows, cols), expanded along its first column.

    Sub-minors are shared between cofactors, so results are memoized.
    """
    key = (rows, cols)
    if key in memo:
        return memo[key]
    if not rows:
        result = HomogeneousForm.constant(matrix.nvars, 1, matrix.field)
    else:
        degree = sum(matrix.col_degrees[j] for j in cols) - sum(matrix.row_degrees[i] for i in rows)
        result = HomogeneousForm.zero(matrix.nvars, degree, matrix.field)
        column, rest_cols = cols[0], cols[1:]
        for position, i in enumerate(rows):
            entry = matrix.entries[i][column]
            if entry.is_zero():
                continue
            rest_rows = rows[:position] + rows[position + 1 :]
            term = entry * _expand(matrix, rest_rows, rest_cols, memo)
            result = result - term if position % 2 else result + term
    memo[key] = result
    return result


def determinant(matrix: FormMatrix, along_row: int = 1) -> HomogeneousForm:
    """Determinant of a square form matrix by cofactor expansion along a 1-based row."""
    size = matrix.rows
    if size != matrix.cols or size == 0:
        raise DegenerateInputError(f"determinant of a {matrix.rows}x{matrix.cols} matrix")
    if not 1 <= along_row <= size:
        raise IndexError(f"row {along_row} outside 1..{size}")
    degree = sum(matrix.col_degrees) - sum(matrix.row_degrees)

    i = along_row - 1
    rest_rows = tuple(r for r in range(size) if r != i)
    memo: dict[tuple[tuple[int, ...], tuple[int, ...]], HomogeneousForm] = {}
    result = HomogeneousForm.zero(matrix.nvars, degree, matrix.field)
    for j in range(size):
        entry = matrix.entries[i][j]
        if entry.is_zero():
            continue
        rest_cols = tuple(c for c in range(size) if c != j)
        term = entry * _expand(matrix, rest_rows, rest_cols, memo)
        result = result - term if (i + j) % 2 else result + term
    return result


def minor_determinant(matrix: FormMatrix, omit_row: int) -> HomogeneousForm:
    """Determinant of the k x k minor of a (k+1) x k matrix obtained by deleting omit_row.

    The result has degree sum(b) - sum of a_i over the kept rows, which equals
    a_{omit_row} for resolution data.
    """
    if matrix.rows != matrix.cols + 1:
        raise DegenerateInputError(f"expected a (k+1)xk matrix, got {matrix.rows}x{matrix.cols}")
    if not 1 <= omit_row <= matrix.rows:
        raise IndexError(f"row {omit_row} outside 1..{matrix.rows}")
    rows = tuple(i for i in range(matrix.rows) if i != omit_row - 1)
    result = _expand(matrix, rows, tuple(range(matrix.cols)), {})
    expected = sum(matrix.col_degrees) - sum(matrix.row_degrees[i] for i in rows)
    if result.degree != expected:
        raise DegenerateInputError(f"minor has degree {result.degree}, expected {expected}")
    return result


def signed_minor_relation(matrix: FormMatrix) -> list[HomogeneousForm]:
    """sum_i (-1)^i F_i * A_ij for each column j; all zero by Cramer's rule."""
    minors = [minor_determinant(matrix, i) for i in range(1, matrix.rows + 1)]
    relations = []
    for j in range(matrix.cols):
        degree = sum(matrix.col_degrees) - sum(matrix.row_degrees) + matrix.col_degrees[j]
        total = HomogeneousForm.zero(matrix.nvars, degree, matrix.field)
        for i, minor in enumerate(minors):
            term = minor * matrix.entries[i][j]
            total = total - term if i % 2 else total + term
        relations.append(total)
    return relations
