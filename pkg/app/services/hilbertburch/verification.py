"""Monte-Carlo check of the envelope profile of a general Hilbert-Burch matrix."""

from __future__ import annotations

import numpy as np
import structlog

from app.core.config import settings
from app.models.envelope import EnvelopeKind, ExpectedProfile
from app.models.report import HBTrialReport
from app.models.resolution import ResolutionData
from app.services.algebra import PrimeField
from app.services.arrangement import resolution_data
from app.services.arrangement.exceptions import ArrangementError
from app.services.envelope import EnvelopeAnalyzer, finite_reducedness
from app.services.envelope.exceptions import EnvelopeError
from app.services.gradedla import FiniteGrowth, GeneratedIdeal, stabilize
from app.services.gradedla.exceptions import GradedAlgebraError
from app.services.hilbertburch.exceptions import DegenerateSampleError, HilbertBurchError
from app.services.hilbertburch.formulas import expected_profile, points_count, require_positive
from app.services.hilbertburch.sampling import minors_of, sample_hb_matrix

logger = structlog.get_logger(__name__)

CHECKS = ("point_count", "round_trip", "reduced", "profile_codim", "bezout_degree", "ggds")


def _check_minors(
    source: GeneratedIdeal,
    data: ResolutionData,
    expected: ExpectedProfile,
    rng: np.random.Generator,
    cap: int,
) -> HBTrialReport:
    n = points_count(data)
    checks = dict.fromkeys(CHECKS, False)

    # h(e) = n from degree b_k - 2 on for a codimension-two ideal with this resolution
    window, growth = stabilize(source, max(0, data.b[-1] - 2), cap)
    checks["point_count"] = isinstance(growth, FiniteGrowth) and growth.degree == n
    checks["round_trip"] = resolution_data(source, cap=cap) == data
    if checks["point_count"]:
        checks["reduced"] = finite_reducedness(source, n, window.end_degree, rng).reduced

    analyzer = EnvelopeAnalyzer(
        source,
        n=n,
        seed_key=rng.integers(0, 2**62, size=2).tolist(),
        cap=cap,
        known_reduced=checks["reduced"],
    )
    observed = []
    profile_ok, bezout_ok = True, True
    for envelope in expected.envelopes:
        report = analyzer.classify_envelope(envelope.d)
        observed.append(report.label)
        profile_ok = profile_ok and envelope.matches(report)
        if envelope.kind is EnvelopeKind.FINITE:
            bezout_ok = bezout_ok and report.scheme_degree == envelope.scheme_degree
    checks["profile_codim"] = profile_ok
    checks["bezout_degree"] = bezout_ok
    ggds = analyzer.geometric_generating_degrees()
    checks["ggds"] = ggds == expected.ggds_expected
    return HBTrialReport(trial=0, checks=checks, observed=observed, ggds=ggds)


def verify_hb_sample(
    data: ResolutionData,
    rng: np.random.Generator,
    field: PrimeField | None = None,
    trial: int = 0,
    cap: int | None = None,
) -> HBTrialReport:
    """Sample A in HB(data) and check Z(A) against the predicted profile.

    A sample with an identically zero minor, or a non-reduced Z(A), is drawn
    again once; the redraw is counted in `resamples`.
    """
    require_positive(data)
    field = field or PrimeField.default()
    cap = cap if cap is not None else settings.degree_cap(sum(data.b))
    expected = expected_profile(data)

    resamples = 0
    for attempt in range(2):
        report, redraw = _attempt(data, expected, rng, field, cap)
        if not redraw or attempt == 1:
            break
        resamples += 1
    report = report.model_copy(update={"trial": trial, "resamples": resamples})
    logger.debug(
        "hb_trial_completed",
        resolution=data.format(),
        trial=trial,
        passed=report.passed,
        resamples=resamples,
    )
    return report


def _attempt(
    data: ResolutionData,
    expected: ExpectedProfile,
    rng: np.random.Generator,
    field: PrimeField,
    cap: int,
) -> tuple[HBTrialReport, bool]:
    """One sample; the flag asks for a redraw (zero minor or non-reduced Z(A))."""
    failed = dict.fromkeys(CHECKS, False)
    try:
        minors = minors_of(sample_hb_matrix(data, rng, field))
    except DegenerateSampleError as e:
        return HBTrialReport(trial=0, checks=failed, error=str(e)), True
    try:
        report = _check_minors(GeneratedIdeal.from_forms(minors), data, expected, rng, cap)
    except (GradedAlgebraError, ArrangementError, EnvelopeError, HilbertBurchError) as e:
        return HBTrialReport(trial=0, checks=failed, error=f"{type(e).__name__}: {e}"), False
    return report, not report.checks["reduced"]
