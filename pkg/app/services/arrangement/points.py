"""Points of the projective plane over F_p and finite arrangements of them."""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass

import numpy as np

from app.services.algebra import PrimeField, ScalarLike
from app.services.arrangement.exceptions import ArrangementError, DuplicatePointError


@dataclass(frozen=True, slots=True)
class PointP2:
    """Homogeneous coordinates scaled so the last nonzero coordinate is 1."""

    coords: tuple[int, int, int]

    @classmethod
    def normalized(cls, coords: Sequence[ScalarLike], field: PrimeField) -> PointP2:
        if len(coords) != 3:
            raise ArrangementError(f"a point of the plane needs 3 coordinates, got {len(coords)}")
        values = [int(c) % field.prime for c in coords]
        nonzero = [i for i, v in enumerate(values) if v]
        if not nonzero:
            raise ArrangementError("(0:0:0) is not a projective point")
        scale = field.inverse(values[nonzero[-1]])
        x, y, z = (v * scale % field.prime for v in values)
        return cls((x, y, z))

    def __str__(self) -> str:
        return "({}:{}:{})".format(*self.coords)


class Arrangement:
    """A finite ordered set of distinct points of P^2."""

    def __init__(self, points: Iterable[PointP2], field: PrimeField):
        self.points = tuple(points)
        self.field = field
        seen: dict[PointP2, int] = {}
        for index, point in enumerate(self.points):
            if point in seen:
                raise DuplicatePointError(
                    f"point {point} appears at positions {seen[point] + 1} and {index + 1}"
                )
            seen[point] = index
        if not self.points:
            raise ArrangementError("an arrangement needs at least one point")

    @classmethod
    def from_coordinates(
        cls,
        rows: Iterable[Sequence[ScalarLike]],
        field: PrimeField,
    ) -> Arrangement:
        return cls((PointP2.normalized(row, field) for row in rows), field)

    @property
    def n(self) -> int:
        return len(self.points)

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self) -> Iterator[PointP2]:
        return iter(self.points)

    def coordinates(self) -> np.ndarray:
        """(n, 3) int64 array of normalized coordinates."""
        return np.array([p.coords for p in self.points], dtype=np.int64).reshape(-1, 3)

    def with_point(self, point: PointP2) -> Arrangement:
        return Arrangement((*self.points, point), self.field)

    def __repr__(self) -> str:
        return f"Arrangement(n={self.n}, p={self.field.prime})"
