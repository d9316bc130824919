"""Tests for prime-field arithmetic, forms and form matrices."""

import numpy as np
import pytest
from pydantic import ValidationError

from app.core.config import Settings
from app.models.resolution import ResolutionData
from app.services.algebra import (
    FormMatrix,
    HomogeneousForm,
    PrimeField,
    determinant,
    form_eval,
    form_partials,
    linear_form,
    minor_determinant,
    signed_minor_relation,
)
from app.services.algebra.exceptions import AlgebraError, DegenerateInputError, FieldMismatchError
from app.services.algebra.monomials import exponent_matrix, monomial_basis, monomial_rank
from app.services.hilbertburch import sample_hb_matrix


def test_scalar_arithmetic(field: PrimeField) -> None:
    """Residues wrap around p and division inverts."""
    a = field(32000)
    assert a + 5 == 2
    assert (a * a).value == 9
    assert (field(7) / 7) == 1
    assert field(3) ** -1 * 3 == 1


def test_unsupported_prime_rejected() -> None:
    """Composite and too-small moduli are refused."""
    with pytest.raises(AlgebraError):
        PrimeField(32001)
    with pytest.raises(AlgebraError):
        PrimeField(101)


def test_default_settings_give_a_usable_field() -> None:
    """The configured default prime passes both the settings and field checks."""
    defaults = Settings(_env_file=None)
    assert defaults.prime == 32003
    assert PrimeField(defaults.prime).prime == 32003
    with pytest.raises(ValidationError):
        Settings(prime=101)
    with pytest.raises(ValidationError):
        Settings(prime=32001)


def test_scalars_from_different_fields_do_not_mix(field: PrimeField) -> None:
    """Adding residues of two different fields fails."""
    other = PrimeField(65521)
    with pytest.raises(FieldMismatchError):
        field(1) + other(1)


def test_graded_lex_order() -> None:
    """Degree-2 monomials in x, y, z come as x^2, xy, xz, y^2, yz, z^2."""
    exponents = [m.exponents for m in monomial_basis(3, 2)]
    assert exponents == [(2, 0, 0), (1, 1, 0), (1, 0, 1), (0, 2, 0), (0, 1, 1), (0, 0, 2)]


def test_monomial_rank_inverts_the_basis() -> None:
    """Ranks of the basis exponents are 0, 1, 2, ... in order."""
    for nvars, d in [(3, 4), (6, 3), (12, 2)]:
        ranks = monomial_rank(exponent_matrix(nvars, d))
        assert np.array_equal(ranks, np.arange(len(ranks)))


def test_monomial_rank_at_high_degree() -> None:
    """Ranking stays exact for long plane windows and the twelve-variable ring."""
    for nvars, d in [(3, 60), (12, 6)]:
        ranks = monomial_rank(exponent_matrix(nvars, d))
        assert np.array_equal(ranks, np.arange(len(ranks)))


def test_monomial_rank_out_of_range() -> None:
    """Exponents beyond the binomial table are refused, not wrapped."""
    with pytest.raises(AlgebraError):
        monomial_rank(np.ones((1, 20), dtype=np.int64))
    with pytest.raises(AlgebraError):
        monomial_rank(np.array([[100, 0, 0]]))


def test_product_degree_and_evaluation(field: PrimeField, rng: np.random.Generator) -> None:
    """Multiplication adds degrees and evaluation is multiplicative."""
    f = HomogeneousForm.random(3, 2, field, rng)
    g = HomogeneousForm.random(3, 3, field, rng)
    product = f * g
    assert product.degree == 5
    for _ in range(5):
        point = field.random_elements(rng, 3).tolist()
        assert form_eval(product, point) == form_eval(f, point) * form_eval(g, point)


def test_partials_of_x2y(field: PrimeField) -> None:
    """d/dx, d/dy and d/dz of x^2 y."""
    f = HomogeneousForm.from_terms(3, 3, {(2, 1, 0): 1}, field)
    dx, dy, dz = form_partials(f)
    assert dx == HomogeneousForm.from_terms(3, 2, {(1, 1, 0): 2}, field)
    assert dy == HomogeneousForm.from_terms(3, 2, {(2, 0, 0): 1}, field)
    assert dz.is_zero()


def test_determinant_of_linear_matrix(field: PrimeField) -> None:
    """det [[x, y], [z, x]] = x^2 - yz."""
    x, y, z = (HomogeneousForm.variable(3, i, field) for i in range(3))
    matrix = FormMatrix.build([[x, y], [z, x]], [0, 0], [1, 1])
    expected = HomogeneousForm.from_terms(3, 2, {(2, 0, 0): 1, (0, 1, 1): -1}, field)
    assert determinant(matrix) == expected
    assert determinant(matrix, along_row=2) == expected


def test_minor_degrees_match_generator_degrees(field: PrimeField, rng: np.random.Generator) -> None:
    """Maximal minors of a sampled matrix have the degrees a_i."""
    data = ResolutionData(a=(3, 3, 4), b=(5, 5))
    matrix = sample_hb_matrix(data, rng, field)
    assert [minor_determinant(matrix, i).degree for i in (1, 2, 3)] == [3, 3, 4]


def test_signed_minor_relation_vanishes(field: PrimeField, rng: np.random.Generator) -> None:
    """Cramer's rule: sum_i (-1)^i F_i A_ij = 0 column by column."""
    for data in [
        ResolutionData(a=(3, 3, 4), b=(5, 5)),
        ResolutionData(a=(2, 2), b=(4,)),
        ResolutionData(a=(5, 5, 5, 6), b=(7, 7, 7)),
    ]:
        for _ in range(3):
            relations = signed_minor_relation(sample_hb_matrix(data, rng, field))
            assert len(relations) == data.k
            assert all(relation.is_zero() for relation in relations)


def test_form_matrix_degree_check(field: PrimeField) -> None:
    """Entries of the wrong degree are rejected."""
    x = HomogeneousForm.variable(3, 0, field)
    with pytest.raises(DegenerateInputError):
        FormMatrix.build([[x, x], [x, x * x]], [0, 0], [1, 1])


def test_linear_form_evaluation(field: PrimeField) -> None:
    """A linear form evaluates to its coefficient sum at (1:1:1)."""
    ell = linear_form([1, 2, 3], field)
    assert form_eval(ell, [1, 1, 1]) == 6
    assert ell([3, 0, -1]) == 0
