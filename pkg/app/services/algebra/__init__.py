"""Exact prime-field arithmetic and dense homogeneous polynomials."""

from app.services.algebra.field import PrimeField, Scalar, ScalarLike
from app.services.algebra.forms import (
    HomogeneousForm,
    form_eval,
    form_mul,
    form_partials,
    linear_form,
    monomial_values,
)
from app.services.algebra.matrices import (
    FormMatrix,
    determinant,
    minor_determinant,
    signed_minor_relation,
)
from app.services.algebra.monomials import Monomial, basis_size, monomial_basis

__all__ = [
    "PrimeField",
    "Scalar",
    "ScalarLike",
    "Monomial",
    "HomogeneousForm",
    "FormMatrix",
    "basis_size",
    "monomial_basis",
    "monomial_values",
    "form_eval",
    "form_mul",
    "form_partials",
    "linear_form",
    "determinant",
    "minor_determinant",
    "signed_minor_relation",
]
