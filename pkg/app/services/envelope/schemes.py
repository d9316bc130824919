"""Reducedness of finite schemes and smoothness of plane curves."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import structlog
from sympy.polys.domains import GF, ZZ
from sympy.polys.galoistools import gf_sqf_part
from sympy.polys.matrices import DomainMatrix

from app.core.config import settings
from app.services.algebra import HomogeneousForm, form_partials
from app.services.algebra.monomials import shift_table
from app.services.envelope.exceptions import (
    ReducednessDisagreementError,
    ReducednessError,
)
from app.services.gradedla import (
    FiniteGrowth,
    GeneratedIdeal,
    GradedPiece,
    IdealSource,
    hilbert_value,
    inverse_mod,
    matmul_mod,
    stabilize,
)
from app.services.gradedla.exceptions import SingularMatrixError

logger = structlog.get_logger(__name__)


@dataclass(frozen=True)
class Reducedness:
    distinct_count: int
    reduced: bool


def standard_columns(piece: GradedPiece) -> np.ndarray:
    """Monomials not leading any basis row; their classes span (S/J)_e."""
    mask = np.ones(piece.ambient_dim, dtype=bool)
    mask[list(piece.pivots)] = False
    return np.flatnonzero(mask)


def multiplication_matrix(
    lower: GradedPiece,
    upper: GradedPiece,
    linear: np.ndarray,
) -> np.ndarray:
    """Matrix of multiplication by a linear form (S/J)_e -> (S/J)_{e+1}.

    Row i is the image of the i-th standard monomial of degree e, written in
    the standard monomials of degree e+1.
    """
    p = lower.field.prime
    source = standard_columns(lower)
    target = standard_columns(upper)
    images = np.zeros((source.size, upper.ambient_dim), dtype=np.int64)
    rows = np.arange(source.size)
    for v in range(lower.nvars):
        if not linear[v]:
            continue
        unit = tuple(1 if i == v else 0 for i in range(lower.nvars))
        columns = shift_table(lower.nvars, lower.degree, unit)[source]
        images[rows, columns] = (images[rows, columns] + linear[v]) % p
    return upper.reduce(images)[:, target]


def characteristic_polynomial(matrix: np.ndarray, p: int) -> list[int]:
    """Coefficients over F_p, leading first."""
    field = GF(p)
    size = matrix.shape[0]
    domain_matrix = DomainMatrix(
        [[field(int(v)) for v in row] for row in matrix],
        (size, size),
        field,
    )
    return [int(c) % p for c in domain_matrix.charpoly()]


def _operator_draw(
    lower: GradedPiece,
    upper: GradedPiece,
    rng: np.random.Generator,
    retries: int,
) -> Reducedness:
    field = lower.field
    p = field.prime
    m = lower.codim
    for attempt in range(retries):
        ell = field.random_elements(rng, lower.nvars)
        u = field.random_elements(rng, lower.nvars)
        try:
            inverse = inverse_mod(multiplication_matrix(lower, upper, ell), p)
        except SingularMatrixError:
            logger.debug("multiplication_operator_singular", attempt=attempt + 1)
            continue
        # mult_u o mult_ell^{-1} acting on (S/J)_{e+1}; eigenvalues are u(P)/ell(P)
        operator = matmul_mod(inverse, multiplication_matrix(lower, upper, u), p)
        chi = characteristic_polynomial(operator, p)
        squarefree = gf_sqf_part(ZZ.map(chi), p, ZZ)
        distinct = len(squarefree) - 1
        return Reducedness(distinct_count=distinct, reduced=distinct == m)
    raise ReducednessError(f"no invertible multiplication by a linear form in {retries} draws")


def finite_reducedness(
    source: IdealSource,
    m: int,
    e: int,
    rng: np.random.Generator,
    retries: int | None = None,
) -> Reducedness:
    """Count distinct points of a finite scheme of degree m from a generic multiplication operator.

    Args:
        source: Ideal whose Hilbert function equals m in degrees e and e+1
        m: Scheme degree
        e: A degree inside the stabilized range
        rng: Generator for the linear forms of both draws
        retries: Attempts per draw at finding an invertible multiplication

    Returns:
        Distinct point count and whether the scheme is reduced

    Raises:
        ReducednessError: If no invertible operator is found
        ReducednessDisagreementError: If the confirming draw disagrees
    """
    if m < 1:
        raise ValueError(f"scheme degree must be positive, got {m}")
    retries = retries or settings.reducedness_retries
    lower, upper = source.piece(e), source.piece(e + 1)
    if lower.codim != m or upper.codim != m:
        raise ReducednessError(
            f"Hilbert function is ({lower.codim}, {upper.codim}) in degrees {e}, {e + 1}, expected {m}"
        )
    first = _operator_draw(lower, upper, rng, retries)
    second = _operator_draw(lower, upper, rng, retries)
    if first != second:
        raise ReducednessDisagreementError(f"operator draws disagree: {first} vs {second}")
    return first


def curve_smoothness(form: HomogeneousForm, cap: int | None = None) -> bool:
    """True iff the partial derivatives of F have no common zero in P^2.

    By the Euler relation F lies in the ideal of its partials, so this is the
    nonsingularity of V(F).
    """
    if form.degree < 1:
        raise ValueError("smoothness needs a form of positive degree")
    if form.is_zero():
        raise ValueError("the zero form does not define a curve")
    partials = [q for q in form_partials(form) if not q.is_zero()]
    if form.degree == 1:
        return True
    ideal = GeneratedIdeal.from_forms(partials)
    start = form.degree - 1
    cap = cap if cap is not None else 3 * form.degree + 4
    window, growth = stabilize(ideal, start, cap)
    smooth = isinstance(growth, FiniteGrowth) and growth.degree == 0
    logger.debug("curve_smoothness_tested", degree=form.degree, smooth=smooth, tail=window.values[-1])
    return smooth


def stabilized_degree(source: IdealSource, end: int, m: int) -> int:
    """A degree e with h(e) = h(e+1) = m at or past the end of a stabilized window."""
    if hilbert_value(source, end + 1) != m:
        raise ReducednessError(f"Hilbert function left {m} in degree {end + 1}")
    return end
