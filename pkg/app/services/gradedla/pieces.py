"""Graded pieces: subspaces of S_d kept in reduced row-echelon form."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

from app.services.algebra import HomogeneousForm, PrimeField, basis_size
from app.services.algebra.monomials import shift_table
from app.services.gradedla.linalg import matmul_mod, row_reduce, stack


@dataclass(frozen=True, eq=False)
class GradedPiece:
    """A subspace of the degree-d forms, stored by its canonical RREF basis."""

    nvars: int
    degree: int
    basis: np.ndarray
    pivots: tuple[int, ...]
    field: PrimeField

    @classmethod
    def span(
        cls,
        nvars: int,
        degree: int,
        rows: np.ndarray,
        field: PrimeField,
    ) -> GradedPiece:
        """Reduced span of coefficient rows."""
        width = basis_size(nvars, degree)
        rows = np.asarray(rows, dtype=np.int64).reshape(-1, width)
        reduced, pivots = row_reduce(rows, field.prime)
        reduced.setflags(write=False)
        return cls(nvars, degree, reduced, tuple(pivots), field)

    @classmethod
    def from_forms(cls, forms: Sequence[HomogeneousForm]) -> GradedPiece:
        first = forms[0]
        for form in forms:
            first._check(form)
            if form.degree != first.degree:
                raise ValueError("a graded piece needs forms of one degree")
        return cls.span(first.nvars, first.degree, np.array([f.coeffs for f in forms]), first.field)

    @classmethod
    def zero(cls, nvars: int, degree: int, field: PrimeField) -> GradedPiece:
        return cls.span(nvars, degree, np.zeros((0, basis_size(nvars, degree))), field)

    @classmethod
    def full(cls, nvars: int, degree: int, field: PrimeField) -> GradedPiece:
        size = basis_size(nvars, degree)
        identity = np.eye(size, dtype=np.int64)
        identity.setflags(write=False)
        return cls(nvars, degree, identity, tuple(range(size)), field)

    @property
    def dim(self) -> int:
        return self.basis.shape[0]

    @property
    def ambient_dim(self) -> int:
        return basis_size(self.nvars, self.degree)

    @property
    def codim(self) -> int:
        return self.ambient_dim - self.dim

    def forms(self) -> tuple[HomogeneousForm, ...]:
        return tuple(HomogeneousForm(self.nvars, self.degree, row, self.field) for row in self.basis)

    def reduce(self, vectors: np.ndarray) -> np.ndarray:
        """Residues of coefficient rows modulo this subspace (normal form w.r.t. the RREF)."""
        vectors = self.field.reduce(np.atleast_2d(vectors))
        if not self.dim:
            return vectors
        coefficients = vectors[:, list(self.pivots)]
        return (vectors - matmul_mod(coefficients, self.basis, self.field.prime)) % self.field.prime

    def contains(self, other: HomogeneousForm | GradedPiece) -> bool:
        vectors = other.coeffs if isinstance(other, HomogeneousForm) else other.basis
        if isinstance(other, GradedPiece) and not other.dim:
            return True
        return not np.any(self.reduce(vectors))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GradedPiece):
            return NotImplemented
        return (
            self.nvars == other.nvars
            and self.degree == other.degree
            and np.array_equal(self.basis, other.basis)
        )

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"GradedPiece(nvars={self.nvars}, degree={self.degree}, dim={self.dim})"


def multiply_by_variables(piece: GradedPiece) -> GradedPiece:
    """S_1 * V, reduced."""
    d = piece.degree
    width = basis_size(piece.nvars, d + 1)
    if not piece.dim:
        return GradedPiece.zero(piece.nvars, d + 1, piece.field)
    blocks = []
    for v in range(piece.nvars):
        unit = tuple(1 if i == v else 0 for i in range(piece.nvars))
        block = np.zeros((piece.dim, width), dtype=np.int64)
        block[:, shift_table(piece.nvars, d, unit)] = piece.basis
        blocks.append(block)
    return GradedPiece.span(piece.nvars, d + 1, stack(blocks, width), piece.field)


def piece_product(piece: GradedPiece, e: int) -> GradedPiece:
    """S_{e-d} * V as a degree-e piece."""
    if e < piece.degree:
        raise ValueError(f"cannot lower degree {piece.degree} to {e}")
    result = piece
    while result.degree < e:
        result = multiply_by_variables(result)
    return result


def piece_sum(left: GradedPiece, right: GradedPiece) -> GradedPiece:
    """Reduced span of both bases."""
    _check_compatible(left, right)
    return GradedPiece.span(
        left.nvars,
        left.degree,
        stack([left.basis, right.basis], left.ambient_dim),
        left.field,
    )


def piece_intersection_dim(left: GradedPiece, right: GradedPiece) -> int:
    """dim V + dim W - dim(V + W)."""
    return left.dim + right.dim - piece_sum(left, right).dim


def _check_compatible(left: GradedPiece, right: GradedPiece) -> None:
    left.field.check(right.field)
    if (left.nvars, left.degree) != (right.nvars, right.degree):
        raise ValueError(
            f"pieces live in different spaces: {(left.nvars, left.degree)} vs {(right.nvars, right.degree)}"
        )
