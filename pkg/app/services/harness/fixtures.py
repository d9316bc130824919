"""Special configurations that uniform sampling never produces."""

from collections.abc import Sequence

import numpy as np
import structlog
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_factor_sqf, gf_sqf_part, gf_strip

from app.services.algebra import HomogeneousForm, PrimeField
from app.services.algebra.monomials import exponent_matrix
from app.services.arrangement import Arrangement, PointP2, in_general_position
from app.services.arrangement.sampling import MAX_GENERAL_DRAWS
from app.services.envelope import curve_smoothness
from app.services.gradedla import GeneratedIdeal
from app.services.harness.exceptions import HarnessError

logger = structlog.get_logger(__name__)

MAX_FIXTURE_DRAWS = 1000


def _determinant3(rows: Sequence[Sequence[int]], p: int) -> int:
    (a, b, c), (d, e, f), (g, h, i) = rows
    return (a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)) % p


def collinear_arrangement(
    rng: np.random.Generator,
    field: PrimeField,
    on_line: int = 3,
    off_line: int = 1,
) -> Arrangement:
    """`on_line` random points of a random line plus `off_line` points off it."""
    p = field.prime
    first = field.random_nonzero_vector(rng, 3)
    second = field.random_nonzero_vector(rng, 3)
    while not np.any(np.cross(first, second) % p):
        second = field.random_nonzero_vector(rng, 3)

    points: list[PointP2] = []
    for _ in range(MAX_FIXTURE_DRAWS):
        if len(points) == on_line:
            break
        weights = field.random_nonzero_vector(rng, 2)
        point = PointP2.normalized((weights[0] * first + weights[1] * second) % p, field)
        if point not in points:
            points.append(point)
    for _ in range(MAX_FIXTURE_DRAWS):
        if len(points) == on_line + off_line:
            break
        candidate = field.random_nonzero_vector(rng, 3)
        if _determinant3([first.tolist(), second.tolist(), candidate.tolist()], p):
            point = PointP2.normalized(candidate, field)
            if point not in points:
                points.append(point)
    if len(points) != on_line + off_line:
        raise HarnessError("could not place distinct points on and off the line")
    return Arrangement(points, field)


def random_smooth_curve(degree: int, rng: np.random.Generator, field: PrimeField) -> HomogeneousForm:
    """A random plane curve, redrawn until its partials have no common zero."""
    for _ in range(MAX_FIXTURE_DRAWS):
        form = HomogeneousForm.random(3, degree, field, rng)
        if not form.is_zero() and curve_smoothness(form):
            return form
    raise HarnessError(f"no smooth curve of degree {degree} found")


def _z_coefficients(form: HomogeneousForm, x: int, y: int) -> np.ndarray:
    """Coefficients of F(x, y, z) as a polynomial in z, constant term first."""
    p = form.field.prime
    exponents = exponent_matrix(3, form.degree)
    coefficients = np.zeros(form.degree + 1, dtype=np.int64)
    for (a, b, c), value in zip(exponents.tolist(), form.coeffs.tolist()):
        if value:
            coefficients[c] = (coefficients[c] + value * pow(x, a, p) * pow(y, b, p)) % p
    return coefficients


def _roots_mod_p(coefficients: np.ndarray, p: int) -> list[int]:
    """Distinct roots in F_p of a polynomial given constant term first."""
    f = gf_strip(ZZ.map([int(c) % p for c in coefficients[::-1]]))
    if len(f) < 2:
        return []
    _, factors = gf_factor_sqf(gf_sqf_part(f, p, ZZ), p, ZZ)
    return sorted(int(-factor[1] % p) for factor in factors if len(factor) == 2)


def points_on_curve(
    form: HomogeneousForm,
    count: int,
    rng: np.random.Generator,
) -> Arrangement:
    """`count` distinct F_p-points of V(F): random (x : y), then every root in z."""
    field = form.field
    points: list[PointP2] = []
    for _ in range(MAX_FIXTURE_DRAWS):
        if len(points) >= count:
            break
        x, y = (int(v) for v in field.random_nonzero_vector(rng, 2))
        for z in _roots_mod_p(_z_coefficients(form, x, y), field.prime):
            point = PointP2.normalized((x, y, z), field)
            if point not in points and len(points) < count:
                points.append(point)
    if len(points) < count:
        raise HarnessError(f"found only {len(points)} of {count} points on the curve")
    logger.debug("curve_points_sampled", degree=form.degree, count=count)
    return Arrangement(points, field)


def general_points_on_curve(
    form: HomogeneousForm,
    count: int,
    rng: np.random.Generator,
    max_draws: int = MAX_GENERAL_DRAWS,
) -> Arrangement:
    """points_on_curve, redrawn until the points are in general position."""
    for _ in range(max_draws):
        arrangement = points_on_curve(form, count, rng)
        if in_general_position(arrangement):
            return arrangement
    raise HarnessError(f"no {count} points in general position on the curve")


def complete_intersection(
    degrees: tuple[int, int],
    rng: np.random.Generator,
    field: PrimeField,
) -> GeneratedIdeal:
    """The ideal of two random forms of the given degrees."""
    forms = [HomogeneousForm.random(3, d, field, rng) for d in degrees]
    return GeneratedIdeal.from_forms(forms)
