"""Monomial bases in graded-lexicographic order.

Degree-d monomials in n variables are listed by descending exponent tuple,
so for x, y, z in degree 2 the order is x^2, xy, xz, y^2, yz, z^2. Every dense
coefficient vector in the toolkit is indexed by this order.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb

import numpy as np

from app.services.algebra.exceptions import AlgebraError

# Binomial table for vectorized ranking. C(95, 16) is the largest entry and fits int64.
_BINOMIAL_ROWS = 96
MAX_RANKED_VARIABLES = 17
_BINOMIALS = np.array(
    [[comb(a, b) for b in range(MAX_RANKED_VARIABLES)] for a in range(_BINOMIAL_ROWS)],
    dtype=np.int64,
)

PLANE_VARIABLES = ("x", "y", "z")


@dataclass(frozen=True, slots=True, order=True)
class Monomial:
    """A monomial given by its exponent vector."""

    exponents: tuple[int, ...]

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    @property
    def nvars(self) -> int:
        return len(self.exponents)

    def __mul__(self, other: Monomial) -> Monomial:
        return Monomial(tuple(a + b for a, b in zip(self.exponents, other.exponents, strict=True)))

    def render(self, names: tuple[str, ...] | None = None) -> str:
        names = names or variable_names(self.nvars)
        parts = []
        for name, power in zip(names, self.exponents):
            if power == 1:
                parts.append(name)
            elif power > 1:
                parts.append(f"{name}^{power}")
        return "*".join(parts) or "1"

    def __str__(self) -> str:
        return self.render()


def variable_names(nvars: int) -> tuple[str, ...]:
    """x, y, z in the plane; x0, x1, ... otherwise."""
    if nvars == 3:
        return PLANE_VARIABLES
    return tuple(f"x{i}" for i in range(nvars))


def basis_size(nvars: int, d: int) -> int:
    """C(d + nvars - 1, nvars - 1), zero for negative degree."""
    if d < 0:
        return 0
    return comb(d + nvars - 1, nvars - 1)


@lru_cache(maxsize=512)
def exponent_matrix(nvars: int, d: int) -> np.ndarray:
    """Exponents of all degree-d monomials, one row per monomial, in basis order."""
    if nvars < 1 or d < 0:
        raise ValueError(f"need nvars >= 1 and d >= 0, got ({nvars}, {d})")
    rows = []
    # Stars and bars: bar positions among d + nvars - 1 slots, descending lex via reversed order.
    slots = d + nvars - 1
    for bars in combinations(range(slots), nvars - 1):
        previous = -1
        exponents = []
        for bar in bars:
            exponents.append(bar - previous - 1)
            previous = bar
        exponents.append(slots - previous - 1)
        rows.append(exponents)
    matrix = np.array(rows, dtype=np.int64).reshape(-1, nvars)
    order = np.lexsort(matrix.T[::-1])[::-1]
    matrix = matrix[order]
    matrix.setflags(write=False)
    return matrix


@lru_cache(maxsize=512)
def monomial_basis(nvars: int, d: int) -> tuple[Monomial, ...]:
    """All monomials of total degree d in graded-lex order."""
    return tuple(Monomial(tuple(int(e) for e in row)) for row in exponent_matrix(nvars, d))


def monomial_rank(exponents: np.ndarray) -> np.ndarray:
    """Positions of exponent rows within their degree's basis.

    The rank counts lexicographically larger tuples of the same degree: at
    position i with remaining degree R_i, tuples that agree before i and carry
    more than e_i at i number C(R_i - e_i + n - i - 2, n - i - 1).
    """
    exponents = np.atleast_2d(np.asarray(exponents, dtype=np.int64))
    nvars = exponents.shape[1]
    remaining = exponents.sum(axis=1)
    top_degree = int(remaining.max()) if remaining.size else 0
    if nvars > MAX_RANKED_VARIABLES or top_degree + nvars - 2 >= _BINOMIAL_ROWS:
        raise AlgebraError(f"cannot rank degree {top_degree} monomials in {nvars} variables")
    ranks = np.zeros(exponents.shape[0], dtype=np.int64)
    for i in range(nvars - 1):
        top = remaining - exponents[:, i] + nvars - i - 2
        ranks += _BINOMIALS[top, nvars - i - 1]
        remaining = remaining - exponents[:, i]
    return ranks


@lru_cache(maxsize=1024)
def shift_table(nvars: int, d: int, multiplier: tuple[int, ...]) -> np.ndarray:
    """Target positions in degree d + deg(m) of m times each degree-d monomial."""
    shifted = exponent_matrix(nvars, d) + np.asarray(multiplier, dtype=np.int64)
    table = monomial_rank(shifted)
    table.setflags(write=False)
    return table


@lru_cache(maxsize=256)
def product_table(nvars: int, d1: int, d2: int) -> np.ndarray:
    """Target positions of products of degree-d1 and degree-d2 monomials, shape (N1, N2)."""
    left = exponent_matrix(nvars, d1)
    right = exponent_matrix(nvars, d2)
    sums = left[:, None, :] + right[None, :, :]
    table = monomial_rank(sums.reshape(-1, nvars)).reshape(left.shape[0], right.shape[0])
    table.setflags(write=False)
    return table
