"""Dense Gauss-Jordan elimination over F_p.

Matrices are numpy int64 arrays of residues. Pivots are chosen as the first
nonzero entry of each column, so results are deterministic for fixed input.
"""

from __future__ import annotations

from collections.abc import Sequence
from typing import Any

import numpy as np

from app.services.gradedla.exceptions import SingularMatrixError

_INT64_BUDGET = 2**62


def as_residues(matrix: Any, p: int, columns: int | None = None) -> np.ndarray:
    """Coerce ints, Scalars or arrays into a 2-D residue array."""
    if isinstance(matrix, np.ndarray):
        array = matrix.astype(np.int64, copy=True)
    else:
        array = np.array([[int(v) for v in row] for row in matrix], dtype=np.int64)
    if array.size == 0:
        width = columns if columns is not None else (array.shape[1] if array.ndim == 2 else 0)
        return np.zeros((0, width), dtype=np.int64)
    return np.mod(np.atleast_2d(array), p)


def row_reduce(matrix: Any, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row-echelon form with zero rows dropped, plus pivot columns."""
    m = as_residues(matrix, p)
    n_rows, n_cols = m.shape
    pivots: list[int] = []
    r = 0
    for c in range(n_cols):
        if r == n_rows:
            break
        candidates = np.flatnonzero(m[r:, c])
        if candidates.size == 0:
            continue
        pivot = r + int(candidates[0])
        if pivot != r:
            m[[r, pivot]] = m[[pivot, r]]
        inv = pow(int(m[r, c]), -1, p)
        m[r, c:] = m[r, c:] * inv % p
        column = m[:, c].copy()
        column[r] = 0
        targets = np.flatnonzero(column)
        if targets.size:
            m[targets, c:] = (m[targets, c:] - np.outer(column[targets], m[r, c:]) % p) % p
        pivots.append(c)
        r += 1
    return m[:r], pivots


def rank(matrix: Any, p: int) -> int:
    return len(row_reduce(matrix, p)[1])


def kernel_basis(matrix: Any, p: int, columns: int | None = None) -> np.ndarray:
    """Basis of the right kernel, one vector per row, in reduced echelon form."""
    m = as_residues(matrix, p, columns)
    n_cols = m.shape[1]
    reduced, pivots = row_reduce(m, p)
    pivot_set = set(pivots)
    free = [c for c in range(n_cols) if c not in pivot_set]
    basis = np.zeros((len(free), n_cols), dtype=np.int64)
    for row, f in enumerate(free):
        basis[row, f] = 1
        if pivots:
            basis[row, pivots] = (-reduced[:, f]) % p
    # Each vector has its leading 1 at the first pivot column or at f; re-reduce for the canonical form.
    return row_reduce(basis, p)[0] if free else basis


def matmul_mod(left: np.ndarray, right: np.ndarray, p: int) -> np.ndarray:
    """Matrix product over F_p, chunked so partial sums never overflow int64."""
    left = np.asarray(left, dtype=np.int64)
    right = np.asarray(right, dtype=np.int64)
    inner = left.shape[-1]
    step = max(1, _INT64_BUDGET // ((p - 1) ** 2))
    result = np.zeros((left.shape[0], right.shape[1]), dtype=np.int64)
    for start in range(0, inner, step):
        stop = min(inner, start + step)
        result = (result + left[:, start:stop] @ right[start:stop, :]) % p
    return result


def inverse_mod(matrix: Any, p: int) -> np.ndarray:
    """Inverse of a square matrix over F_p by Gauss-Jordan on [M | I]."""
    m = as_residues(matrix, p)
    size = m.shape[0]
    if m.shape != (size, size):
        raise SingularMatrixError(f"cannot invert a {m.shape} matrix")
    augmented = np.hstack([m, np.eye(size, dtype=np.int64)])
    reduced, pivots = row_reduce(augmented, p)
    if pivots[:size] != list(range(size)) or len(pivots) < size:
        raise SingularMatrixError("matrix is singular over F_p")
    return reduced[:size, size:]


def stack(blocks: Sequence[np.ndarray], columns: int) -> np.ndarray:
    """Vertical stack that tolerates empty blocks."""
    nonempty = [b for b in blocks if b.shape[0]]
    if not nonempty:
        return np.zeros((0, columns), dtype=np.int64)
    return np.vstack(nonempty)
