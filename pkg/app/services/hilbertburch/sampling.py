"""Random Hilbert-Burch matrices and their maximal minors."""

import numpy as np

from app.models.resolution import ResolutionData
from app.services.algebra import FormMatrix, HomogeneousForm, PrimeField, minor_determinant
from app.services.hilbertburch.exceptions import DegenerateSampleError
from app.services.hilbertburch.formulas import require_positive


def sample_hb_matrix(
    data: ResolutionData,
    rng: np.random.Generator,
    field: PrimeField,
) -> FormMatrix:
    """(k+1) x k matrix whose (i, j) entry is a random form of degree b_j - a_i."""
    require_positive(data)
    entries = [
        [HomogeneousForm.random(3, b - a, field, rng) for b in data.b]
        for a in data.a
    ]
    return FormMatrix.build(entries, data.a, data.b)


def minors_of(matrix: FormMatrix) -> list[HomogeneousForm]:
    """F_i = determinant of the minor omitting row i, for i = 1 .. k+1.

    Raises:
        DegenerateSampleError: If some F_i vanishes identically
    """
    minors = [minor_determinant(matrix, i) for i in range(1, matrix.rows + 1)]
    zero = [i + 1 for i, minor in enumerate(minors) if minor.is_zero()]
    if zero:
        raise DegenerateSampleError(f"minors {zero} vanish identically")
    return minors
