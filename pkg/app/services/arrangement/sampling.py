"""Random point arrangements."""

from itertools import combinations

import numpy as np
import structlog

from app.services.algebra import PrimeField
from app.services.arrangement.exceptions import ArrangementError
from app.services.arrangement.ideal import evaluation_matrix
from app.services.arrangement.points import Arrangement, PointP2
from app.services.gradedla import rank

logger = structlog.get_logger(__name__)

MAX_GENERAL_DRAWS = 100
# Six-on-a-conic is checked exhaustively only up to this many points.
MAX_CONIC_CHECK = 10


def sample_general_points(n: int, rng: np.random.Generator, field: PrimeField) -> Arrangement:
    """n distinct points with uniform coordinates in F_p^3 minus the origin.

    Collisions are redrawn; the draw order is fixed, so a seeded generator
    always yields the same arrangement.
    """
    if n < 1:
        raise ValueError(f"need at least one point, got {n}")
    points: list[PointP2] = []
    seen: set[PointP2] = set()
    collisions = 0
    while len(points) < n:
        point = PointP2.normalized(field.random_nonzero_vector(rng, 3).tolist(), field)
        if point in seen:
            collisions += 1
            continue
        seen.add(point)
        points.append(point)
    if collisions:
        logger.debug("point_collisions_resampled", n=n, collisions=collisions)
    return Arrangement(points, field)


def collinear_triples(arrangement: Arrangement) -> list[tuple[int, int, int]]:
    """Index triples of points lying on a common line."""
    if arrangement.n < 3:
        return []
    p = arrangement.field.prime
    triples = np.array(list(combinations(range(arrangement.n), 3)), dtype=np.int64)
    rows = arrangement.coordinates()[triples]
    (a, b, c), (d, e, f), (g, h, i) = (rows[:, r, :].T for r in range(3))
    det = (
        a * ((e * i - f * h) % p) % p
        - b * ((d * i - f * g) % p) % p
        + c * ((d * h - e * g) % p) % p
    ) % p
    return [(t[0], t[1], t[2]) for t in triples[det == 0].tolist()]


def conconic_sextuples(arrangement: Arrangement) -> list[tuple[int, ...]]:
    """Index sextuples of points lying on a common conic."""
    values = evaluation_matrix(arrangement, 2)
    p = arrangement.field.prime
    return [s for s in combinations(range(arrangement.n), 6) if rank(values[list(s)], p) < 6]


def in_general_position(arrangement: Arrangement) -> bool:
    """No three points on a line and, up to MAX_CONIC_CHECK points, no six on a conic."""
    if collinear_triples(arrangement):
        return False
    if arrangement.n <= MAX_CONIC_CHECK and conconic_sextuples(arrangement):
        return False
    return True


def sample_points_in_general_position(
    n: int,
    rng: np.random.Generator,
    field: PrimeField,
    max_draws: int = MAX_GENERAL_DRAWS,
) -> Arrangement:
    """Uniform arrangements redrawn until one is in general position."""
    for draw in range(max_draws):
        arrangement = sample_general_points(n, rng, field)
        if in_general_position(arrangement):
            if draw:
                logger.debug("special_arrangements_resampled", n=n, redraws=draw)
            return arrangement
    raise ArrangementError(f"no {n} points in general position after {max_draws} draws")
