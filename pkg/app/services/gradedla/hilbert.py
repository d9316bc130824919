"""Hilbert functions of graded ideals and their growth classification."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from typing import Protocol, Union, runtime_checkable

import structlog

from app.core.config import settings
from app.services.algebra import PrimeField, basis_size
from app.services.gradedla.exceptions import NotStabilizedError
from app.services.gradedla.linalg import stack
from app.services.gradedla.pieces import GradedPiece, multiply_by_variables

logger = structlog.get_logger(__name__)


@dataclass(frozen=True)
class HilbertWindow:
    """Consecutive values h(e) = dim (S/J)_e starting at start_degree."""

    start_degree: int
    values: tuple[int, ...]

    @property
    def end_degree(self) -> int:
        return self.start_degree + len(self.values) - 1

    def at(self, e: int) -> int:
        if not self.start_degree <= e <= self.end_degree:
            raise KeyError(f"degree {e} outside window [{self.start_degree}, {self.end_degree}]")
        return self.values[e - self.start_degree]

    def differences(self) -> list[int]:
        return [b - a for a, b in zip(self.values, self.values[1:])]


@dataclass(frozen=True)
class NotStabilized:
    pass


@dataclass(frozen=True)
class FiniteGrowth:
    """Constant Hilbert function: a zero-dimensional scheme of this degree (0 means empty)."""

    degree: int


@dataclass(frozen=True)
class CurveGrowth:
    """Linear growth with slope curve_degree; excess is the residual point count."""

    curve_degree: int
    excess: int


Growth = Union[NotStabilized, FiniteGrowth, CurveGrowth]


def plane_curve_hilbert(curve_degree: int, e: int) -> int:
    """Hilbert polynomial of a plane curve of the given degree."""
    return curve_degree * e - curve_degree * (curve_degree - 3) // 2


def classify_growth(window: HilbertWindow, width: int | None = None) -> Growth:
    """Read the dimension and degree of V(J) off the tail of a Hilbert window.

    Args:
        window: Hilbert function values over consecutive degrees
        width: Number of trailing first differences that must agree

    Returns:
        FiniteGrowth if the tail is flat, CurveGrowth if it rises by a constant
        positive step, NotStabilized otherwise
    """
    width = width or settings.stabilization_window
    if len(window.values) < width + 1:
        return NotStabilized()
    tail = window.differences()[-width:]
    step = tail[0]
    if any(diff != step for diff in tail):
        return NotStabilized()
    if step == 0:
        return FiniteGrowth(degree=window.values[-1])
    if step > 0:
        excess = window.values[-1] - plane_curve_hilbert(step, window.end_degree)
        return CurveGrowth(curve_degree=step, excess=excess)
    return NotStabilized()


@runtime_checkable
class IdealSource(Protocol):
    """Anything that can produce the degree-e piece of a homogeneous ideal."""

    nvars: int
    field: PrimeField

    def piece(self, e: int) -> GradedPiece: ...


class GeneratedIdeal:
    """The ideal generated by a finite set of graded pieces.

    Pieces are built degree by degree as J_e = S_1 * J_{e-1} + (generators of degree e)
    and cached, so a window over consecutive degrees costs one product per step.
    """

    def __init__(self, generators: Sequence[GradedPiece]):
        if not generators:
            raise ValueError("a generated ideal needs at least one generator piece")
        first = generators[0]
        for piece in generators:
            first.field.check(piece.field)
            if piece.nvars != first.nvars:
                raise ValueError("generator pieces use different variable counts")
        self.nvars = first.nvars
        self.field = first.field
        self._by_degree: dict[int, list[GradedPiece]] = {}
        for piece in generators:
            self._by_degree.setdefault(piece.degree, []).append(piece)
        self.min_degree = min(self._by_degree)
        self._cache: dict[int, GradedPiece] = {}

    @classmethod
    def from_forms(cls, forms: Sequence) -> GeneratedIdeal:
        """Group forms by degree and span each group."""
        groups: dict[int, list] = {}
        for form in forms:
            groups.setdefault(form.degree, []).append(form)
        return cls([GradedPiece.from_forms(group) for _, group in sorted(groups.items())])

    @property
    def generator_degrees(self) -> list[int]:
        return sorted(self._by_degree)

    def piece(self, e: int) -> GradedPiece:
        if e < self.min_degree:
            return GradedPiece.zero(self.nvars, e, self.field)
        if e in self._cache:
            return self._cache[e]
        start = max((d for d in self._cache if d < e), default=None)
        current = self._cache[start] if start is not None else None
        degree = start + 1 if start is not None else self.min_degree
        while degree <= e:
            blocks = [g.basis for g in self._by_degree.get(degree, [])]
            if current is not None:
                blocks.append(multiply_by_variables(current).basis)
            rows = stack(blocks, basis_size(self.nvars, degree))
            current = GradedPiece.span(self.nvars, degree, rows, self.field)
            self._cache[degree] = current
            degree += 1
        return current


def hilbert_value(source: IdealSource, e: int) -> int:
    """h(e) = dim S_e - dim J_e."""
    return basis_size(source.nvars, e) - source.piece(e).dim


def window_of(source: IdealSource, e_from: int, e_to: int) -> HilbertWindow:
    if e_from > e_to:
        raise ValueError(f"empty window [{e_from}, {e_to}]")
    return HilbertWindow(
        start_degree=e_from,
        values=tuple(hilbert_value(source, e) for e in range(e_from, e_to + 1)),
    )


def hilbert_window(generators: Sequence[GradedPiece], e_from: int, e_to: int) -> HilbertWindow:
    """Hilbert window of S/J for the ideal J generated by the given pieces."""
    if any(g.degree > e_from for g in generators):
        raise ValueError("generator degrees must not exceed the window start")
    return window_of(GeneratedIdeal(generators), e_from, e_to)


def stabilize(
    source: IdealSource,
    e_from: int,
    cap: int,
    width: int | None = None,
) -> tuple[HilbertWindow, Growth]:
    """Extend a Hilbert window from e_from until its growth classifies.

    Raises:
        NotStabilizedError: If degree cap is reached first
    """
    width = width or settings.stabilization_window
    values: list[int] = []
    for e in range(e_from, cap + 1):
        values.append(hilbert_value(source, e))
        window = HilbertWindow(start_degree=e_from, values=tuple(values))
        growth = classify_growth(window, width)
        if not isinstance(growth, NotStabilized):
            logger.debug("hilbert_window_stabilized", start=e_from, end=e, growth=repr(growth))
            return window, growth
    raise NotStabilizedError(
        f"Hilbert function did not stabilize in degrees {e_from}..{cap}",
        values=values,
    )

