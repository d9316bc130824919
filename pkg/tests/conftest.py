"""Pytest configuration and fixtures."""

import numpy as np
import pytest

from app.models.resolution import ResolutionData
from app.services.algebra import PrimeField
from app.services.arrangement import Arrangement, sample_points_in_general_position

PRIME = 32003


@pytest.fixture
def field() -> PrimeField:
    """The default coefficient field F_32003."""
    return PrimeField(PRIME)


@pytest.fixture
def rng() -> np.random.Generator:
    """A seeded generator so every test draws the same values."""
    return np.random.default_rng(20240611)


@pytest.fixture
def single_point(field: PrimeField) -> Arrangement:
    """One point, (1:2:3)."""
    return Arrangement.from_coordinates([(1, 2, 3)], field)


@pytest.fixture
def collinear_four(field: PrimeField) -> Arrangement:
    """Three points on the line z = 0 and one point off it."""
    return Arrangement.from_coordinates([(1, 0, 0), (0, 1, 0), (1, 1, 0), (0, 0, 1)], field)


@pytest.fixture
def five_points(field: PrimeField) -> Arrangement:
    """Five points with no three collinear."""
    return sample_points_in_general_position(5, np.random.default_rng(5), field)


@pytest.fixture
def eight_points(field: PrimeField) -> Arrangement:
    """Eight points in general position."""
    return sample_points_in_general_position(8, np.random.default_rng(8), field)


@pytest.fixture
def hb_data() -> ResolutionData:
    """Eight points cut out by two cubics and a quartic."""
    return ResolutionData(a=(3, 3, 4), b=(5, 5))
