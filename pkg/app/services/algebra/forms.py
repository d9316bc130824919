"""Dense homogeneous forms over F_p."""

from __future__ import annotations

from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass

import numpy as np

from app.services.algebra.exceptions import FieldMismatchError
from app.services.algebra.field import PrimeField, Scalar, ScalarLike
from app.services.algebra.monomials import (
    Monomial,
    basis_size,
    exponent_matrix,
    monomial_basis,
    monomial_rank,
    product_table,
    variable_names,
)


@dataclass(frozen=True, eq=False)
class HomogeneousForm:
    """A degree-d form stored as its coefficient vector over the degree-d monomial basis.

    The zero form keeps its nominal degree, so sums and products of zero forms
    still respect degree bookkeeping.
    """

    nvars: int
    degree: int
    coeffs: np.ndarray
    field: PrimeField

    def __post_init__(self) -> None:
        coeffs = self.field.reduce(self.coeffs)
        if coeffs.shape != (basis_size(self.nvars, self.degree),):
            raise ValueError(
                f"expected {basis_size(self.nvars, self.degree)} coefficients, got {coeffs.shape}"
            )
        coeffs.setflags(write=False)
        object.__setattr__(self, "coeffs", coeffs)

    # Constructors

    @classmethod
    def zero(cls, nvars: int, degree: int, field: PrimeField) -> HomogeneousForm:
        return cls(nvars, degree, np.zeros(basis_size(nvars, degree), dtype=np.int64), field)

    @classmethod
    def constant(cls, nvars: int, value: ScalarLike, field: PrimeField) -> HomogeneousForm:
        return cls(nvars, 0, np.array([int(value)], dtype=np.int64), field)

    @classmethod
    def variable(cls, nvars: int, index: int, field: PrimeField) -> HomogeneousForm:
        """The linear form x_index."""
        exponents = [0] * nvars
        exponents[index] = 1
        return cls.from_terms(nvars, 1, {tuple(exponents): 1}, field)

    @classmethod
    def from_terms(
        cls,
        nvars: int,
        degree: int,
        terms: Mapping[tuple[int, ...] | Monomial, ScalarLike],
        field: PrimeField,
    ) -> HomogeneousForm:
        """Build a form from {exponent tuple: coefficient}."""
        coeffs = np.zeros(basis_size(nvars, degree), dtype=np.int64)
        for key, value in terms.items():
            exponents = key.exponents if isinstance(key, Monomial) else tuple(key)
            if len(exponents) != nvars or sum(exponents) != degree:
                raise ValueError(f"monomial {exponents} is not of degree {degree} in {nvars} variables")
            index = int(monomial_rank(np.array([exponents]))[0])
            coeffs[index] = (coeffs[index] + int(value)) % field.prime
        return cls(nvars, degree, coeffs, field)

    @classmethod
    def random(
        cls,
        nvars: int,
        degree: int,
        field: PrimeField,
        rng: np.random.Generator,
    ) -> HomogeneousForm:
        """Form with independent uniform coefficients."""
        return cls(nvars, degree, field.random_elements(rng, basis_size(nvars, degree)), field)

    # Inspection

    @property
    def monomials(self) -> tuple[Monomial, ...]:
        return monomial_basis(self.nvars, self.degree)

    def is_zero(self) -> bool:
        return not np.any(self.coeffs)

    def terms(self) -> dict[Monomial, int]:
        """Nonzero terms in basis order."""
        return {
            monomial: int(value)
            for monomial, value in zip(self.monomials, self.coeffs)
            if value
        }

    def _check(self, other: HomogeneousForm) -> None:
        self.field.check(other.field)
        if self.nvars != other.nvars:
            raise FieldMismatchError(f"{self.nvars} vs {other.nvars} variables")

    # Arithmetic

    def __add__(self, other: HomogeneousForm) -> HomogeneousForm:
        self._check(other)
        if self.degree != other.degree:
            raise ValueError(f"cannot add forms of degrees {self.degree} and {other.degree}")
        return HomogeneousForm(self.nvars, self.degree, self.coeffs + other.coeffs, self.field)

    def __neg__(self) -> HomogeneousForm:
        return HomogeneousForm(self.nvars, self.degree, -self.coeffs, self.field)

    def __sub__(self, other: HomogeneousForm) -> HomogeneousForm:
        return self + (-other)

    def __mul__(self, other: HomogeneousForm | ScalarLike) -> HomogeneousForm:
        if isinstance(other, HomogeneousForm):
            return form_mul(self, other)
        scale = int(other) % self.field.prime
        return HomogeneousForm(self.nvars, self.degree, self.coeffs * scale, self.field)

    def __rmul__(self, other: ScalarLike) -> HomogeneousForm:
        return self * other

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HomogeneousForm):
            return NotImplemented
        return (
            self.nvars == other.nvars
            and self.degree == other.degree
            and self.field.prime == other.field.prime
            and np.array_equal(self.coeffs, other.coeffs)
        )

    def __hash__(self) -> int:
        return hash((self.nvars, self.degree, self.field.prime, self.coeffs.tobytes()))

    def __call__(self, point: Sequence[ScalarLike]) -> Scalar:
        return form_eval(self, point)

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        names = variable_names(self.nvars)
        parts = []
        for monomial, value in self.terms().items():
            body = monomial.render(names)
            if body == "1":
                parts.append(str(value))
            elif value == 1:
                parts.append(body)
            else:
                parts.append(f"{value}*{body}")
        return " + ".join(parts)

    __repr__ = __str__


def monomial_values(
    points: np.ndarray,
    nvars: int,
    d: int,
    field: PrimeField,
) -> np.ndarray:
    """Values of every degree-d monomial at every point, shape (len(points), N_d)."""
    points = field.reduce(np.atleast_2d(points))
    exponents = exponent_matrix(nvars, d)
    values = np.ones((points.shape[0], exponents.shape[0]), dtype=np.int64)
    if d == 0:
        return values
    # powers[v][:, e] = P_v^e for e <= d
    for v in range(nvars):
        powers = np.ones((points.shape[0], d + 1), dtype=np.int64)
        for e in range(1, d + 1):
            powers[:, e] = powers[:, e - 1] * points[:, v] % field.prime
        values = values * powers[:, exponents[:, v]] % field.prime
    return values


def form_eval(form: HomogeneousForm, point: Sequence[ScalarLike]) -> Scalar:
    """Evaluate F at a point given by its coordinates."""
    if len(point) != form.nvars:
        raise ValueError(f"point has {len(point)} coordinates, form has {form.nvars} variables")
    coordinates = np.array([int(c) for c in point], dtype=np.int64)
    values = monomial_values(coordinates, form.nvars, form.degree, form.field)[0]
    return form.field(int(np.sum(values * form.coeffs % form.field.prime)))


def form_mul(left: HomogeneousForm, right: HomogeneousForm) -> HomogeneousForm:
    """Product of two forms; degree is additive and zero is absorbing."""
    left._check(right)
    p = left.field.prime
    degree = left.degree + right.degree
    coeffs = np.zeros(basis_size(left.nvars, degree), dtype=np.int64)
    if left.is_zero() or right.is_zero():
        return HomogeneousForm(left.nvars, degree, coeffs, left.field)
    lnz = np.flatnonzero(left.coeffs)
    rnz = np.flatnonzero(right.coeffs)
    table = product_table(left.nvars, left.degree, right.degree)[np.ix_(lnz, rnz)]
    products = np.outer(left.coeffs[lnz], right.coeffs[rnz]) % p
    np.add.at(coeffs, table.ravel(), products.ravel())
    return HomogeneousForm(left.nvars, degree, coeffs, left.field)


def form_partials(form: HomogeneousForm) -> tuple[HomogeneousForm, ...]:
    """All first partial derivatives, each of degree deg F - 1."""
    if form.degree < 1:
        raise ValueError("partials need a form of positive degree")
    exponents = exponent_matrix(form.nvars, form.degree)
    partials = []
    for v in range(form.nvars):
        coeffs = np.zeros(basis_size(form.nvars, form.degree - 1), dtype=np.int64)
        mask = (exponents[:, v] > 0) & (form.coeffs != 0)
        if np.any(mask):
            lowered = exponents[mask].copy()
            lowered[:, v] -= 1
            targets = monomial_rank(lowered)
            coeffs[targets] = form.coeffs[mask] * exponents[mask, v] % form.field.prime
        partials.append(HomogeneousForm(form.nvars, form.degree - 1, coeffs, form.field))
    return tuple(partials)


def linear_form(coefficients: Iterable[ScalarLike], field: PrimeField) -> HomogeneousForm:
    """The linear form sum c_i x_i."""
    coeffs = np.array([int(c) for c in coefficients], dtype=np.int64)
    return HomogeneousForm(len(coeffs), 1, coeffs, field)
