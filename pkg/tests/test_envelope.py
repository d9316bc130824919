"""Tests for envelope classification, generating degrees, reducedness and smoothness."""

import numpy as np
import pytest

from app.models.envelope import EnvelopeKind
from app.services.algebra import HomogeneousForm, PrimeField
from app.services.arrangement import Arrangement, sample_general_points
from app.services.envelope import (
    EnvelopeAnalyzer,
    Reducedness,
    classify_envelope,
    curve_smoothness,
    envelope_equals,
    envelope_profile,
    finite_reducedness,
    geometric_generating_degrees,
)
from app.services.envelope import schemes
from app.services.envelope.exceptions import ReducednessDisagreementError, ReducednessError
from app.services.gradedla import GeneratedIdeal
from app.services.harness.fixtures import general_points_on_curve, random_smooth_curve


def test_five_points_lie_on_a_smooth_conic(five_points: Arrangement) -> None:
    """Z_2 of five general points is a smooth conic."""
    report = classify_envelope(five_points, 2)
    assert report.kind is EnvelopeKind.CURVE
    assert report.curve_degree == 2
    assert report.excess == 0
    assert report.smooth is True
    assert report.label == "Curve(2,excess 0,smooth)"
    assert classify_envelope(five_points, 1).kind is EnvelopeKind.PLANE


def test_eight_points_and_the_ninth(eight_points: Arrangement) -> None:
    """Two cubics through eight general points meet in a ninth point."""
    analyzer = EnvelopeAnalyzer(eight_points, seed_key=(8,))
    z3 = analyzer.classify_envelope(3)
    assert z3.kind is EnvelopeKind.FINITE
    assert (z3.scheme_degree, z3.distinct_count, z3.reduced) == (9, 9, True)
    assert z3.label == "Finite(9,9,reduced)"
    assert analyzer.classify_envelope(4).kind is EnvelopeKind.EQUALS_Z
    assert analyzer.classify_envelope(2).kind is EnvelopeKind.PLANE
    assert not analyzer.envelope_equals(3, 4)
    assert analyzer.geometric_generating_degrees() == [3, 4]


def test_collinear_points_give_a_line_and_a_point(collinear_four: Arrangement) -> None:
    """Z_2 is the line z = 0 plus the extra point."""
    report = classify_envelope(collinear_four, 2)
    assert report.kind is EnvelopeKind.CURVE
    assert report.ideal_dim == 2
    assert report.smooth is None
    assert report.label == "Curve(1,excess 1,not-tested)"
    assert classify_envelope(collinear_four, 3).kind is EnvelopeKind.EQUALS_Z


def test_single_point_is_its_first_envelope(single_point: Arrangement) -> None:
    """One point is cut out by linear forms."""
    report = classify_envelope(single_point, 1)
    assert report.kind is EnvelopeKind.EQUALS_Z
    assert report.scheme_degree == 1
    assert geometric_generating_degrees(single_point) == [1]


def test_envelope_equals_is_reflexive_and_symmetric(eight_points: Arrangement) -> None:
    """Envelope equality within and across degrees."""
    assert envelope_equals(eight_points, 4, 4)
    assert envelope_equals(eight_points, 1, 2)
    assert not envelope_equals(eight_points, 4, 3)


def test_profile_of_eight_points(eight_points: Arrangement) -> None:
    """Full profile of eight general points."""
    profile = envelope_profile(eight_points)
    assert profile.n == 8
    assert profile.generator_degrees == [3, 3, 4]
    assert profile.ggds == [3, 4]
    assert [r.label for r in profile.reports] == ["Plane", "Plane", "Finite(9,9,reduced)", "EqualsZ"]
    assert [r.d for r in profile.reports if r.is_ggd] == [3, 4]
    assert profile.at(3).codim == 2
    with pytest.raises(KeyError):
        profile.at(5)


def test_thirteen_points_have_sixteen_point_quartic_envelope(field: PrimeField) -> None:
    """Two quartics through thirteen points meet in sixteen."""
    arrangement = sample_general_points(13, np.random.default_rng(13), field)
    report = classify_envelope(arrangement, 4, seed_key=(13,))
    assert report.kind is EnvelopeKind.FINITE
    assert (report.scheme_degree, report.distinct_count) == (16, 16)


def test_analyzer_reports_are_cached(five_points: Arrangement) -> None:
    """Repeated classification returns the cached report."""
    analyzer = EnvelopeAnalyzer(five_points)
    assert analyzer.classify_envelope(3) is analyzer.classify_envelope(3)
    with pytest.raises(ValueError):
        analyzer.classify_envelope(0)


def test_curve_smoothness(field: PrimeField) -> None:
    """Smooth conics and cubics against reducible and nodal curves."""
    x, y, z = (HomogeneousForm.variable(3, i, field) for i in range(3))
    assert curve_smoothness(x * x + y * y + z * z)
    assert not curve_smoothness(x * y)
    assert curve_smoothness(x * x * x + y * y * y + z * z * z)
    # nodal cubic y^2 z - x^3 - x^2 z
    assert not curve_smoothness(y * y * z - x * x * x - x * x * z)


def test_two_conics_meet_in_four_distinct_points(field: PrimeField, rng: np.random.Generator) -> None:
    """Two general conics give a reduced scheme of degree four."""
    ideal = GeneratedIdeal.from_forms([HomogeneousForm.random(3, 2, field, rng) for _ in range(2)])
    result = finite_reducedness(ideal, 4, 2, np.random.default_rng(1))
    assert result.distinct_count == 4
    assert result.reduced


def test_double_point_is_not_reduced(field: PrimeField) -> None:
    """(x, y)^2 defines a degree-3 scheme supported at (0:0:1)."""
    x, y = (HomogeneousForm.variable(3, i, field) for i in range(2))
    ideal = GeneratedIdeal.from_forms([x * x, x * y, y * y])
    result = finite_reducedness(ideal, 3, 2, np.random.default_rng(2))
    assert result.distinct_count == 1
    assert not result.reduced


def test_reducedness_needs_a_stable_degree(field: PrimeField) -> None:
    """Reducedness below the stable range is refused."""
    x, y = (HomogeneousForm.variable(3, i, field) for i in range(2))
    ideal = GeneratedIdeal.from_forms([x * x, x * y, y * y])
    with pytest.raises(ReducednessError):
        finite_reducedness(ideal, 3, 0, np.random.default_rng(3))


@pytest.mark.parametrize("n", [2, 3, 4, 6, 7, 9, 10, 12])
def test_profile_invariants_on_random_arrangements(n: int, field: PrimeField) -> None:
    """Generating degrees are generator degrees, start at a_1 and end at Z."""
    arrangement = sample_general_points(n, np.random.default_rng(1000 + n), field)
    profile = envelope_profile(arrangement, seed_key=(n,))
    assert set(profile.ggds) <= set(profile.generator_degrees)
    assert profile.ggds[0] == profile.generator_degrees[0]
    assert profile.reports[-1].kind is EnvelopeKind.EQUALS_Z
    assert [r.codim for r in profile.reports] == sorted(r.codim for r in profile.reports)


def test_disagreeing_operator_draws_raise(
    monkeypatch: pytest.MonkeyPatch, field: PrimeField, rng: np.random.Generator
) -> None:
    """Two draws reporting different point counts are an error, not an answer."""
    draws = iter([Reducedness(distinct_count=4, reduced=True), Reducedness(distinct_count=3, reduced=False)])
    monkeypatch.setattr(schemes, "_operator_draw", lambda *args: next(draws))
    ideal = GeneratedIdeal.from_forms([HomogeneousForm.random(3, 2, field, rng) for _ in range(2)])
    with pytest.raises(ReducednessDisagreementError):
        finite_reducedness(ideal, 4, 2, np.random.default_rng(1))


def test_eleven_points_on_a_smooth_cubic(field: PrimeField) -> None:
    """The cubic, then the twelve points it shares with a quartic, then Z."""
    rng = np.random.default_rng(311)
    cubic = random_smooth_curve(3, rng, field)
    arrangement = general_points_on_curve(cubic, 11, rng)
    analyzer = EnvelopeAnalyzer(arrangement, seed_key=(11,))
    z3 = analyzer.classify_envelope(3)
    assert z3.kind is EnvelopeKind.CURVE
    assert (z3.curve_degree, z3.smooth) == (3, True)
    z4 = analyzer.classify_envelope(4)
    assert z4.label == "Finite(12,12,reduced)"
    assert analyzer.classify_envelope(5).kind is EnvelopeKind.EQUALS_Z
    assert analyzer.geometric_generating_degrees() == [3, 4, 5]
