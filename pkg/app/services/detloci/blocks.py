"""Graded pieces of determinantal ideals, split by multidegree.

Every generator used here is homogeneous for the grading by row counts and
column counts of the generic matrix, so each graded piece is a direct sum
over multidegrees. Working one multidegree block at a time keeps every row
reduction small even where the full piece has tens of thousands of monomials.
"""

from __future__ import annotations

from collections.abc import Mapping, Sequence
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Literal

import numpy as np
import structlog

from app.services.algebra import HomogeneousForm, PrimeField
from app.services.algebra.monomials import exponent_matrix, monomial_rank
from app.services.detloci.exceptions import DetLociError
from app.services.detloci.ring import GenericMatrixRing, is_unit_ideal
from app.services.gradedla.linalg import rank, row_reduce

logger = structlog.get_logger(__name__)


def multidegrees(exponents: np.ndarray, k: int) -> np.ndarray:
    """Row sums followed by column sums of each exponent vector read as a (k+1) x k grid."""
    grid = np.asarray(exponents, dtype=np.int64).reshape(-1, k + 1, k)
    return np.hstack([grid.sum(axis=2), grid.sum(axis=1)])


@dataclass(frozen=True)
class MultigradedBasis:
    """Degree-e monomials of the generic matrix ring, labelled by block and position in block."""

    k: int
    degree: int
    block_of: np.ndarray
    local_index: np.ndarray
    block_sizes: np.ndarray

    @property
    def size(self) -> int:
        return int(self.block_of.shape[0])


@lru_cache(maxsize=64)
def multigraded_basis(k: int, degree: int) -> MultigradedBasis:
    exponents = exponent_matrix(k * (k + 1), degree)
    _, inverse, sizes = np.unique(
        multidegrees(exponents, k), axis=0, return_inverse=True, return_counts=True
    )
    block_of = inverse.reshape(-1).astype(np.int64)
    order = np.argsort(block_of, kind="stable")
    starts = np.concatenate([[0], np.cumsum(sizes)[:-1]])
    local_index = np.empty_like(block_of)
    local_index[order] = np.arange(block_of.shape[0]) - starts[block_of[order]]
    return MultigradedBasis(k, degree, block_of, local_index, sizes.astype(np.int64))


@dataclass(frozen=True, eq=False)
class BlockedPiece:
    """A subspace of the degree-e forms, stored as one reduced basis per multidegree block."""

    basis: MultigradedBasis
    prime: int
    blocks: Mapping[int, np.ndarray] = field(default_factory=dict)
    full: bool = False

    @property
    def dim(self) -> int:
        if self.full:
            return self.basis.size
        return sum(int(rows.shape[0]) for rows in self.blocks.values())

    def _block(self, block: int) -> np.ndarray:
        if self.full:
            return np.eye(int(self.basis.block_sizes[block]), dtype=np.int64)
        width = int(self.basis.block_sizes[block])
        return self.blocks.get(block, np.zeros((0, width), dtype=np.int64))

    def _check(self, other: BlockedPiece) -> None:
        if (self.basis.k, self.basis.degree, self.prime) != (other.basis.k, other.basis.degree, other.prime):
            raise DetLociError("pieces live in different degrees, rings or fields")

    def __add__(self, other: BlockedPiece) -> BlockedPiece:
        self._check(other)
        if self.full or other.full:
            return BlockedPiece(self.basis, self.prime, full=True)
        blocks = {}
        for block in set(self.blocks) | set(other.blocks):
            reduced, _ = row_reduce(np.vstack([self._block(block), other._block(block)]), self.prime)
            if reduced.shape[0]:
                blocks[block] = reduced
        return BlockedPiece(self.basis, self.prime, blocks)

    def contains(self, other: BlockedPiece) -> bool:
        self._check(other)
        if self.full:
            return True
        if other.full:
            return self.dim == self.basis.size
        for block, rows in other.blocks.items():
            mine = self._block(block)
            if rank(np.vstack([mine, rows]), self.prime) > mine.shape[0]:
                return False
        return True

    def contains_form(self, form: HomogeneousForm) -> bool:
        """Membership of a degree-e form, checked block by block."""
        if form.degree != self.basis.degree or form.nvars != self.basis.k * (self.basis.k + 1):
            raise DetLociError(f"form of degree {form.degree} does not live in this piece")
        if self.full:
            return True
        support = np.flatnonzero(form.coeffs)
        for block in np.unique(self.basis.block_of[support]):
            vector = np.zeros((1, int(self.basis.block_sizes[block])), dtype=np.int64)
            columns = support[self.basis.block_of[support] == block]
            vector[0, self.basis.local_index[columns]] = form.coeffs[columns]
            mine = self._block(int(block))
            if rank(np.vstack([mine, vector]), self.prime) > mine.shape[0]:
                return False
        return True


def intersection_dim(first: BlockedPiece, second: BlockedPiece) -> int:
    return first.dim + second.dim - (first + second).dim


def generated_piece(
    generators: Sequence[HomogeneousForm],
    k: int,
    degree: int,
    prime: int,
) -> BlockedPiece:
    """Degree-e piece of the ideal generated by multihomogeneous forms."""
    basis = multigraded_basis(k, degree)
    if is_unit_ideal(tuple(generators)):
        return BlockedPiece(basis, prime, full=True)

    nvars = k * (k + 1)
    rows_by_block: dict[int, list[np.ndarray]] = {}
    for generator in generators:
        if generator.degree > degree or generator.is_zero():
            continue
        support = np.flatnonzero(generator.coeffs)
        terms = exponent_matrix(nvars, generator.degree)[support]
        coeffs = generator.coeffs[support]
        multipliers = exponent_matrix(nvars, degree - generator.degree)
        products = multipliers[:, None, :] + terms[None, :, :]
        positions = monomial_rank(products.reshape(-1, nvars)).reshape(len(multipliers), len(support))

        blocks = basis.block_of[positions[:, 0]]
        if np.any(basis.block_of[positions] != blocks[:, None]):
            raise DetLociError("generator is not homogeneous for the row and column grading")
        local = basis.local_index[positions]
        order = np.argsort(blocks, kind="stable")
        unique, starts = np.unique(blocks[order], return_index=True)
        stops = np.append(starts[1:], len(order))
        for block, start, stop in zip(unique, starts, stops):
            chosen = order[start:stop]
            dense = np.zeros((len(chosen), int(basis.block_sizes[block])), dtype=np.int64)
            dense[np.arange(len(chosen))[:, None], local[chosen]] = coeffs[None, :]
            rows_by_block.setdefault(int(block), []).append(dense)

    blocks_rref = {}
    for block, parts in rows_by_block.items():
        reduced, _ = row_reduce(np.vstack(parts), prime)
        if reduced.shape[0]:
            blocks_rref[block] = reduced
    return BlockedPiece(basis, prime, blocks_rref)


IdealFamily = Literal["I", "J"]


class DetIdealPieces:
    """Graded pieces of I_r = (F_1..F_r) or J_r, cached per degree.

    Args:
        ring: The generic matrix ring
        which: "I" for I_r, "J" for J_r
        r: Index in 1..k+1
    """

    def __init__(self, ring: GenericMatrixRing, which: IdealFamily, r: int):
        self.ring = ring
        self.which = which
        self.r = r
        if which == "I":
            self.generators = ring.i_generators(r)
        elif which == "J":
            self.generators = ring.j_generators(r)
        else:
            raise DetLociError(f"unknown ideal family {which!r}")
        self._pieces: dict[int, BlockedPiece] = {}

    @property
    def name(self) -> str:
        return f"{self.which}_{self.r}"

    @property
    def field(self) -> PrimeField:
        return self.ring.field

    def piece(self, e: int) -> BlockedPiece:
        if e not in self._pieces:
            self._pieces[e] = generated_piece(self.generators, self.ring.k, e, self.field.prime)
            logger.debug("detloci_piece_computed", ideal=self.name, k=self.ring.k, e=e, dim=self._pieces[e].dim)
        return self._pieces[e]

    def dim(self, e: int) -> int:
        return self.piece(e).dim
