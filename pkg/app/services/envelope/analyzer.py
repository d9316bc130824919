"""Degree envelopes Z_d = V(I_d) of a homogeneous ideal of points.

For each d the envelope is read off the ideal J^(d) generated by I_d: its
Hilbert function eventually becomes constant (finite envelope) or linear
(curve), and comparing the tails of two such functions decides whether two
envelopes coincide.
"""

from __future__ import annotations

from collections.abc import Sequence

import numpy as np
import structlog

from app.core.config import settings
from app.models.envelope import EnvelopeKind, EnvelopeProfile, EnvelopeReport
from app.services.arrangement import Arrangement, as_source, generator_degrees, resolution_data
from app.services.arrangement.ideal import PointIdeal
from app.services.envelope.exceptions import EnvelopeInvariantError
from app.services.envelope.schemes import (
    curve_smoothness,
    finite_reducedness,
    stabilized_degree,
)
from app.services.gradedla import (
    CurveGrowth,
    FiniteGrowth,
    GeneratedIdeal,
    Growth,
    HilbertWindow,
    IdealSource,
    hilbert_value,
    stabilize,
)

logger = structlog.get_logger(__name__)


class EnvelopeAnalyzer:
    """Classifies the envelopes of one ideal, caching every window it computes.

    Args:
        target: An arrangement or any ideal source of a zero-dimensional scheme Z
        n: Degree of Z; taken from the resolution data of the source when omitted
        seed_key: Entropy for the reducedness draws; each degree gets its own substream
        cap: Highest degree any Hilbert window may reach
        known_reduced: Whether Z is already known to be reduced
    """

    def __init__(
        self,
        target: Arrangement | IdealSource,
        n: int | None = None,
        seed_key: Sequence[int] = (0,),
        cap: int | None = None,
        known_reduced: bool | None = None,
    ):
        self.source = as_source(target)
        self.field = self.source.field
        self.seed_key = tuple(int(s) for s in seed_key)
        if cap is None:
            cap = settings.degree_cap()
            if n is not None or hasattr(self.source, "n"):
                cap = max(cap, (n or self.source.n) + settings.stabilization_window + 1)
        self.cap = cap
        # Arrangements are reduced by construction; generated ideals only when a caller has checked
        self.known_reduced = (
            known_reduced if known_reduced is not None else isinstance(self.source, PointIdeal)
        )
        self._n = n if n is not None else getattr(self.source, "n", None)
        self._generator_degrees: list[int] | None = None
        self._ideals: dict[int, GeneratedIdeal] = {}
        self._windows: dict[int, tuple[HilbertWindow, Growth]] = {}
        self._reports: dict[int, EnvelopeReport] = {}

    # Ideal-level data

    @property
    def n(self) -> int:
        if self._n is None:
            # n = (sum b^2 - sum a^2) / 2, checked inside resolution_data
            data = resolution_data(self.source, cap=self.cap)
            self._n = (sum(x * x for x in data.b) - sum(x * x for x in data.a)) // 2
        return self._n

    @property
    def generator_degrees(self) -> list[int]:
        if self._generator_degrees is None:
            self._generator_degrees = generator_degrees(self.source, cap=self.cap)
        return self._generator_degrees

    def envelope_ideal(self, d: int) -> GeneratedIdeal | None:
        """J^(d) = (I_d), or None when I_d = 0."""
        if d not in self._ideals:
            piece = self.source.piece(d)
            if not piece.dim:
                return None
            self._ideals[d] = GeneratedIdeal([piece])
        return self._ideals[d]

    def envelope_window(self, d: int) -> tuple[HilbertWindow, Growth]:
        if d not in self._windows:
            ideal = self.envelope_ideal(d)
            if ideal is None:
                raise ValueError(f"I_{d} = 0 has no envelope window")
            self._windows[d] = stabilize(ideal, d, self.cap)
        return self._windows[d]

    def rng_for(self, d: int) -> np.random.Generator:
        return np.random.default_rng([*self.seed_key, d])

    # Operations

    def classify_envelope(self, d: int) -> EnvelopeReport:
        """Plane, curve, finite scheme or Z itself."""
        if d < 1:
            raise ValueError(f"envelopes are defined for d >= 1, got {d}")
        if d in self._reports:
            return self._reports[d]

        piece = self.source.piece(d)
        if not piece.dim:
            report = EnvelopeReport(d=d, kind=EnvelopeKind.PLANE, ideal_dim=0)
        else:
            window, growth = self.envelope_window(d)
            if isinstance(growth, CurveGrowth):
                smooth = curve_smoothness(piece.forms()[0]) if piece.dim == 1 else None
                report = EnvelopeReport(
                    d=d,
                    kind=EnvelopeKind.CURVE,
                    ideal_dim=piece.dim,
                    curve_degree=growth.curve_degree,
                    excess=growth.excess,
                    smooth=smooth,
                )
            else:
                assert isinstance(growth, FiniteGrowth)
                report = self._finite_report(d, piece.dim, window, growth.degree)

        logger.debug("envelope_classified", d=d, label=report.label)
        self._reports[d] = report
        return report

    def _finite_report(self, d: int, ideal_dim: int, window: HilbertWindow, m: int) -> EnvelopeReport:
        if m < self.n:
            raise EnvelopeInvariantError(f"Z_{d} has degree {m}, smaller than the {self.n} points it contains")
        if m == self.n and self.known_reduced:
            distinct, reduced = m, True
        else:
            ideal = self.envelope_ideal(d)
            assert ideal is not None
            e = stabilized_degree(ideal, window.end_degree, m)
            result = finite_reducedness(ideal, m, e, self.rng_for(d))
            distinct, reduced = result.distinct_count, result.reduced
        kind = EnvelopeKind.EQUALS_Z if m == self.n and reduced else EnvelopeKind.FINITE
        return EnvelopeReport(
            d=d,
            kind=kind,
            ideal_dim=ideal_dim,
            scheme_degree=m,
            distinct_count=distinct,
            reduced=reduced,
        )

    def _tail_degrees(self, *degrees: int) -> range:
        end = max(self.envelope_window(d)[0].end_degree for d in degrees)
        return range(end - settings.stabilization_window, end + 1)

    def envelope_equals(self, d1: int, d2: int) -> bool:
        """Z_{d1} = Z_{d2}, decided on the stabilized tails of both Hilbert functions.

        Since J^(d1) is contained in J^(d2) in high degrees, equal dimensions
        there mean equal saturations.
        """
        if d1 > d2:
            d1, d2 = d2, d1
        first, second = self.envelope_ideal(d1), self.envelope_ideal(d2)
        if first is None or second is None:
            return first is None and second is None
        if d1 == d2:
            return True
        return all(
            hilbert_value(first, e) == hilbert_value(second, e) for e in self._tail_degrees(d1, d2)
        )

    def geometric_generating_degrees(self) -> list[int]:
        """Generator degrees d with Z_d different from Z_{d-1}."""
        return [d for d in sorted(set(self.generator_degrees)) if not self.envelope_equals(d - 1, d)]

    def check_chain(self, d: int) -> None:
        """Z_{d-1} ⊇ Z_d: dim J^(d-1)_e <= dim J^(d)_e on the stabilized tail."""
        previous, current = self.envelope_ideal(d - 1), self.envelope_ideal(d)
        if current is None:
            if previous is not None:
                raise EnvelopeInvariantError(f"I_{d} = 0 although I_{d - 1} is not")
            return
        if previous is None:
            return
        for e in self._tail_degrees(d - 1, d):
            if previous.piece(e).dim > current.piece(e).dim:
                raise EnvelopeInvariantError(f"Z_{d} is not contained in Z_{d - 1} (degree {e})")

    def envelope_profile(self) -> EnvelopeProfile:
        """Reports for d = 1 .. max generator degree, with the chain and generating-degree rules enforced."""
        degrees = self.generator_degrees
        d_stop = degrees[-1]
        reports = [self.classify_envelope(d) for d in range(1, d_stop + 1)]

        changes = []
        for d in range(1, d_stop + 1):
            self.check_chain(d)
            if not self.envelope_equals(d - 1, d):
                changes.append(d)
        ggds = self.geometric_generating_degrees()
        if changes != ggds:
            raise EnvelopeInvariantError(f"envelope changes at {changes}, outside generator degrees {degrees}")
        if not ggds or ggds[0] != degrees[0]:
            raise EnvelopeInvariantError(f"minimal generator degree {degrees[0]} is not a generating degree")
        if reports[-1].kind is not EnvelopeKind.EQUALS_Z:
            raise EnvelopeInvariantError(f"Z_{d_stop} is {reports[-1].label}, not Z")

        marked = [r.model_copy(update={"is_ggd": r.d in ggds}) for r in reports]
        logger.debug("envelope_profile_computed", ggds=ggds, generator_degrees=degrees)
        return EnvelopeProfile(n=self.n, generator_degrees=degrees, reports=marked, ggds=ggds)


def classify_envelope(target: Arrangement | IdealSource, d: int, **kwargs) -> EnvelopeReport:
    return EnvelopeAnalyzer(target, **kwargs).classify_envelope(d)


def envelope_equals(target: Arrangement | IdealSource, d1: int, d2: int, **kwargs) -> bool:
    return EnvelopeAnalyzer(target, **kwargs).envelope_equals(d1, d2)


def geometric_generating_degrees(target: Arrangement | IdealSource, **kwargs) -> list[int]:
    return EnvelopeAnalyzer(target, **kwargs).geometric_generating_degrees()


def envelope_profile(target: Arrangement | IdealSource, **kwargs) -> EnvelopeProfile:
    return EnvelopeAnalyzer(target, **kwargs).envelope_profile()
