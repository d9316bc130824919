"""Tests for resolution-data arithmetic, predictions and Hilbert-Burch sampling."""

import numpy as np
import pytest

from app.models.envelope import EnvelopeKind
from app.models.resolution import ResolutionData
from app.services.algebra import PrimeField, signed_minor_relation
from app.services.hilbertburch import (
    CHECKS,
    codimension_claims,
    corollary_clauses,
    d_r_for_n,
    expected_codim_rank_locus,
    expected_profile,
    generic_resolution_data,
    is_positive,
    minors_of,
    parse_resolution_data,
    points_count,
    r_of,
    require_positive,
    sample_hb_matrix,
    verify_hb_sample,
)
from app.services.hilbertburch.exceptions import InvalidResolutionDataError, NonPositiveDataError


def test_parse_resolution_data() -> None:
    """Degrees are sorted and counted."""
    data = parse_resolution_data("a=4,3,3 b=5,5")
    assert data == ResolutionData(a=(3, 3, 4), b=(5, 5))
    assert data.k == 2
    assert str(data) == "a=3,3,4 b=5,5"


@pytest.mark.parametrize(
    "text",
    ["a=3,3,4", "a=3,3,4 b=5", "a=3,3,4 b=5,6", "a=0,2 b=2", "a=x b=y", "a=2 b="],
)
def test_malformed_resolution_data(text: str) -> None:
    """Bad text is an invalid resolution data error."""
    with pytest.raises(InvalidResolutionDataError):
        parse_resolution_data(text)


def test_positivity() -> None:
    """Positivity compares b_j with a_{j+1}."""
    assert is_positive(ResolutionData(a=(3, 3, 4), b=(5, 5)))
    assert not is_positive(ResolutionData(a=(2, 2, 3), b=(3, 4)))
    with pytest.raises(NonPositiveDataError):
        require_positive(ResolutionData(a=(2, 2, 3), b=(3, 4)))


def test_points_count() -> None:
    """Point counts for known resolution data."""
    assert points_count(ResolutionData(a=(3, 3, 4), b=(5, 5))) == 8
    assert points_count(ResolutionData(a=(5, 5, 5, 6), b=(7, 7, 7))) == 18
    assert points_count(ResolutionData(a=(3, 4, 5), b=(6, 6))) == 11
    assert points_count(ResolutionData(a=(2, 3), b=(5,))) == 6


@pytest.mark.parametrize("n, expected", [(1, (1, 2)), (4, (2, 2)), (8, (3, 2)), (13, (4, 2)), (18, (5, 3))])
def test_d_r_for_n(n: int, expected: tuple[int, int]) -> None:
    """Least d with C(d+2, 2) > n and the remainder r."""
    assert d_r_for_n(n) == expected


@pytest.mark.parametrize(
    "n, a, b",
    [
        (2, (1, 2), (3,)),
        (4, (2, 2), (4,)),
        (5, (2, 3, 3), (4, 4)),
        (8, (3, 3, 4), (5, 5)),
        (18, (5, 5, 5, 6), (7, 7, 7)),
    ],
)
def test_generic_resolution_data(n: int, a: tuple[int, ...], b: tuple[int, ...]) -> None:
    """Resolution data of n general points."""
    assert generic_resolution_data(n) == ResolutionData(a=a, b=b)


def test_generic_data_counts_its_points() -> None:
    """Generic data for n always describes n points."""
    for n in range(2, 80):
        data = generic_resolution_data(n)
        assert points_count(data) == n
        assert is_positive(data)


def test_corollary_clauses() -> None:
    """Nine points lie on a cubic, thirteen give d^2 points, eighteen change only once."""
    on_curve = corollary_clauses(9)
    assert on_curve.r == 1
    assert on_curve.ggds == (3, 4)
    assert on_curve.curve_degree == 3

    finite = corollary_clauses(13)
    assert finite.ggds == (4, 5)
    assert finite.finite_degree == 16
    assert finite.extra_points == 3

    assert corollary_clauses(18).ggds == (5,)
    with pytest.raises(ValueError):
        corollary_clauses(1)


def test_expected_profile_of_eight_points() -> None:
    """Plane, plane, nine points, then Z."""
    profile = expected_profile(ResolutionData(a=(3, 3, 4), b=(5, 5)))
    assert [e.kind for e in profile.envelopes] == [
        EnvelopeKind.PLANE,
        EnvelopeKind.PLANE,
        EnvelopeKind.FINITE,
        EnvelopeKind.EQUALS_Z,
    ]
    assert profile.at(3).scheme_degree == 9
    assert profile.at(4).scheme_degree == 8
    assert profile.ggds_expected == [3, 4]


def test_expected_profile_of_a_complete_intersection() -> None:
    """For k = 1 the second generator already cuts out Z."""
    profile = expected_profile(ResolutionData(a=(2, 3), b=(5,)))
    assert profile.at(2).kind is EnvelopeKind.CURVE
    assert profile.at(2).curve_degree == 2
    assert profile.at(3).kind is EnvelopeKind.EQUALS_Z
    assert profile.ggds_expected == [2, 3]


def test_expected_profile_of_eighteen_points() -> None:
    """Z_5 is already Z for eighteen points."""
    data = ResolutionData(a=(5, 5, 5, 6), b=(7, 7, 7))
    profile = expected_profile(data)
    assert r_of(data, 5) == 3
    assert profile.at(5).kind is EnvelopeKind.EQUALS_Z
    assert profile.ggds_expected == [5]


def test_expected_profile_rejects_non_positive_data() -> None:
    """Predictions need positive data."""
    with pytest.raises(NonPositiveDataError):
        expected_profile(ResolutionData(a=(2, 2, 3), b=(3, 4)))


def test_rank_locus_codimension() -> None:
    """(m - c)(n - c) for small matrices."""
    assert expected_codim_rank_locus(3, 2, 1) == 2
    assert expected_codim_rank_locus(3, 2, 0) == 6
    with pytest.raises(ValueError):
        expected_codim_rank_locus(3, 2, 3)


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_codimension_claims_agree(k: int) -> None:
    """Computed and claimed codimensions agree."""
    claims = codimension_claims(k)
    assert claims[0].label == "L_k+1"
    assert all(claim.computed == claim.claimed for claim in claims)


def test_sample_hb_matrix_degrees(field: PrimeField, rng: np.random.Generator, hb_data: ResolutionData) -> None:
    """Entry degrees of a sampled matrix are b_j - a_i."""
    matrix = sample_hb_matrix(hb_data, rng, field)
    assert (matrix.rows, matrix.cols) == (3, 2)
    assert matrix.entry_degrees() == [[2, 2], [2, 2], [1, 1]]
    assert [minor.degree for minor in minors_of(matrix)] == [3, 3, 4]


def test_verify_complete_intersection_sample(field: PrimeField) -> None:
    """A (2,2;4) sample passes every check."""
    report = verify_hb_sample(ResolutionData(a=(2, 2), b=(4,)), np.random.default_rng(4), field, trial=7)
    assert report.trial == 7
    assert set(report.checks) == set(CHECKS)
    assert report.passed, report
    assert report.observed == ["Plane", "EqualsZ"]


def test_verify_eight_point_sample(field: PrimeField, hb_data: ResolutionData) -> None:
    """A (3,3,4;5,5) sample passes with ggds 3 and 4."""
    report = verify_hb_sample(hb_data, np.random.default_rng(5), field)
    assert report.passed, report
    assert report.ggds == [3, 4]
    assert report.observed[2] == "Finite(9,9,reduced)"


@pytest.mark.parametrize(
    "data",
    [ResolutionData(a=(3, 4, 5), b=(6, 6)), ResolutionData(a=(5, 5, 5, 6), b=(7, 7, 7))],
    ids=["eleven-points", "eighteen-points"],
)
@pytest.mark.parametrize("seed", [0, 1])
def test_verify_samples_match_the_prediction(data: ResolutionData, seed: int, field: PrimeField) -> None:
    """A sampled matrix has the predicted envelopes and generating degrees."""
    report = verify_hb_sample(data, np.random.default_rng(seed), field, trial=seed)
    assert report.passed, report
    assert report.ggds == expected_profile(data).ggds_expected


def test_signed_minor_relation_over_many_samples(field: PrimeField) -> None:
    """Cramer's relation holds for every sampled matrix of generic data."""
    rng = np.random.default_rng(100)
    for n in range(2, 22):
        data = generic_resolution_data(n)
        for _ in range(5):
            relations = signed_minor_relation(sample_hb_matrix(data, rng, field))
            assert len(relations) == data.k
            assert all(relation.is_zero() for relation in relations)
