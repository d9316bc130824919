"""Experiment orchestrator - runs commands and assembles their reports."""

import asyncio
import hashlib
import json
import time
from collections import Counter
from collections.abc import Callable
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import Any, TypeVar

import numpy as np
import structlog

from app.core.config import settings
from app.models.envelope import EnvelopeKind, EnvelopeReport
from app.models.report import (
    AnalyzeResult,
    ExampleRow,
    GenericSizeResult,
    HBTrialReport,
    HilbertEntry,
    ProfileRow,
    Report,
    ReportSummary,
    RunConfig,
    SampleResult,
    TheoremResult,
)
from app.services.algebra import PrimeField
from app.services.arrangement import (
    format_points,
    hilbert_function,
    read_points,
    resolution_data,
    sample_general_points,
    sample_points_in_general_position,
    write_points,
)
from app.services.arrangement.exceptions import ArrangementError
from app.services.detloci import detloci_checks
from app.services.detloci.checks import MAX_K
from app.services.envelope import EnvelopeAnalyzer
from app.services.envelope.exceptions import EnvelopeError
from app.services.gradedla.exceptions import GradedAlgebraError
from app.services.harness.exceptions import HarnessError, UsageError
from app.services.harness.fixtures import (
    collinear_arrangement,
    complete_intersection,
    general_points_on_curve,
    random_smooth_curve,
)
from app.services.hilbertburch import (
    CHECKS,
    corollary_clauses,
    expected_profile,
    generic_resolution_data,
    is_positive,
    parse_resolution_data,
    points_count,
    require_positive,
    verify_hb_sample,
)
from app.services.hilbertburch.exceptions import HilbertBurchError

logger = structlog.get_logger(__name__)

T = TypeVar("T")

# Envelope computations are numpy-bound; threads keep trial order under gather.
_executor = ThreadPoolExecutor(max_workers=settings.max_workers)

# Per-command stream keys so different commands never share random draws
STREAM_KEYS = {
    "sample-points": 1,
    "verify-generic": 2,
    "verify-theorem": 3,
    "examples": 4,
}

MAX_GENERIC_N = 60

COMPUTATION_ERRORS = (GradedAlgebraError, ArrangementError, EnvelopeError, HilbertBurchError)


def trial_rng(seed: int, command: str, *index: int) -> np.random.Generator:
    return np.random.default_rng([seed, STREAM_KEYS[command], *index])


def inputs_digest(command: str, inputs: dict[str, Any]) -> str:
    canonical = json.dumps({"command": command, **inputs}, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(canonical.encode()).hexdigest()


class ExperimentHarness:
    """Runs one command under a fixed configuration.

    Args:
        config: Effective run configuration, echoed in every report
        pass_rate_threshold: Minimum pass rate for Monte-Carlo commands
    """

    def __init__(self, config: RunConfig, pass_rate_threshold: float | None = None):
        self.config = config
        self.field = PrimeField(config.prime)
        self.cap = config.max_degree_cap
        self.threshold = (
            pass_rate_threshold if pass_rate_threshold is not None else settings.pass_rate_threshold
        )

    async def _map(self, fn: Callable[[int], T], count: int) -> list[T]:
        """Run fn(0), .., fn(count - 1) on the worker pool, results in index order."""
        loop = asyncio.get_running_loop()
        futures = [loop.run_in_executor(_executor, fn, index) for index in range(count)]
        return list(await asyncio.gather(*futures))

    def _report(
        self,
        command: str,
        inputs: dict[str, Any],
        results: list[dict[str, Any]],
        summary: ReportSummary,
        started: float,
    ) -> Report:
        elapsed = (time.perf_counter() - started) * 1000
        logger.info(
            "command_completed",
            command=command,
            passed=summary.passed,
            failed=summary.failed,
            ok=summary.ok,
            duration_ms=round(elapsed, 1),
        )
        return Report(
            command=command,
            config=self.config,
            inputs_digest=inputs_digest(command, inputs),
            results=results,
            summary=summary,
            timings_ms={"total": round(elapsed, 1)},
        )

    # Commands

    async def analyze(self, points_file: str | Path) -> Report:
        """Hilbert function, resolution data and envelope profile of a point file."""
        started = time.perf_counter()
        arrangement = read_points(points_file, self.field)
        logger.info("analyze_started", points_file=str(points_file), n=arrangement.n)

        def run(_: int) -> AnalyzeResult:
            data = resolution_data(arrangement, cap=self.cap)
            profile = EnvelopeAnalyzer(
                arrangement,
                seed_key=(self.config.seed,),
                cap=self.cap,
            ).envelope_profile()
            top = max(data.b) - 1
            table = [HilbertEntry(e=e, h=hilbert_function(arrangement, e)) for e in range(top + 1)]
            return AnalyzeResult(
                n=arrangement.n,
                hilbert_function=table,
                resolution=data,
                resolution_text=data.format(),
                positive=is_positive(data),
                profile=profile,
            )

        (result,) = await self._map(run, 1)
        inputs = {"points": arrangement.coordinates().tolist()}
        summary = ReportSummary(passed=1)
        return self._report("analyze", inputs, [result.model_dump(mode="json")], summary, started)

    async def sample_points(self, n: int, out_file: str | Path) -> Report:
        """Sample n general points and write them to a point file."""
        if n < 1:
            raise UsageError(f"sample-points needs n >= 1, got {n}")
        started = time.perf_counter()
        arrangement = sample_general_points(n, trial_rng(self.config.seed, "sample-points", n), self.field)
        path = write_points(out_file, arrangement, seed=self.config.seed)
        digest = hashlib.sha256(format_points(arrangement, self.config.seed).encode()).hexdigest()
        result = SampleResult(n=n, path=str(path), seed=self.config.seed, points_digest=digest)
        summary = ReportSummary(passed=1)
        return self._report("sample-points", {"n": n}, [result.model_dump(mode="json")], summary, started)

    async def verify_generic(self, n_min: int, n_max: int) -> Report:
        """Check the general-points predictions for every n in [n_min, n_max]."""
        if not 2 <= n_min <= n_max <= MAX_GENERIC_N:
            raise UsageError(f"need 2 <= n_min <= n_max <= {MAX_GENERIC_N}, got {n_min}..{n_max}")
        started = time.perf_counter()
        trials = self.config.trials
        results = []
        passed_total = failed_total = 0
        ok = True
        for n in range(n_min, n_max + 1):
            data = generic_resolution_data(n)
            clauses = corollary_clauses(n)
            outcomes = await self._map(lambda trial, n=n: self._generic_trial(n, trial), trials)
            failing = [trial for trial, failures in enumerate(outcomes) if failures]
            passed = trials - len(failing)
            result = GenericSizeResult(
                n=n,
                d=clauses.d,
                r=clauses.r,
                expected_resolution=data.format(),
                positive=is_positive(data),
                trials=trials,
                passed=passed,
                pass_rate=round(passed / trials, 4),
                clause_failures=dict(sorted(Counter(f for failures in outcomes for f in failures).items())),
                failing_trials=failing,
            )
            logger.info("generic_size_verified", n=n, pass_rate=result.pass_rate)
            results.append(result.model_dump(mode="json"))
            passed_total += passed
            failed_total += len(failing)
            ok = ok and passed / trials >= self.threshold
        summary = ReportSummary(passed=passed_total, failed=failed_total, ok=ok)
        inputs = {"n_min": n_min, "n_max": n_max, "trials": trials}
        return self._report("verify-generic", inputs, results, summary, started)

    def _generic_trial(self, n: int, trial: int) -> list[str]:
        """Names of the failed predictions for one sample of n points."""
        seed = self.config.seed
        clauses = corollary_clauses(n)
        d = clauses.d
        failures = []
        try:
            arrangement = sample_general_points(n, trial_rng(seed, "verify-generic", n, trial), self.field)
            if resolution_data(arrangement, cap=self.cap) != generic_resolution_data(n):
                failures.append("resolution")
            analyzer = EnvelopeAnalyzer(
                arrangement,
                seed_key=(seed, STREAM_KEYS["verify-generic"], n, trial),
                cap=self.cap,
            )
            if tuple(analyzer.geometric_generating_degrees()) != clauses.ggds:
                failures.append("ggds")
            report = analyzer.classify_envelope(d)
            if clauses.curve_degree is not None:
                if not (
                    report.kind is EnvelopeKind.CURVE
                    and report.curve_degree == clauses.curve_degree
                    and report.smooth is True
                ):
                    failures.append("smooth_curve")
            elif clauses.finite_degree is not None:
                if not (
                    report.kind is EnvelopeKind.FINITE
                    and report.scheme_degree == clauses.finite_degree
                    and report.distinct_count == clauses.finite_degree
                    and report.reduced
                    and report.scheme_degree - n == clauses.extra_points
                ):
                    failures.append("finite_envelope")
            elif report.kind is not EnvelopeKind.EQUALS_Z:
                failures.append("equals_z")
        except COMPUTATION_ERRORS as e:
            logger.warning("generic_trial_failed", n=n, trial=trial, error=str(e))
            failures.append("error")
        return failures

    async def verify_theorem(self, resolution_text: str) -> Report:
        """Monte-Carlo check of the predicted envelopes of general Hilbert-Burch matrices."""
        data = parse_resolution_data(resolution_text)
        require_positive(data)
        started = time.perf_counter()
        trials = self.config.trials
        expected = expected_profile(data)

        def run(trial: int) -> HBTrialReport:
            rng = trial_rng(self.config.seed, "verify-theorem", trial)
            return verify_hb_sample(data, rng, self.field, trial=trial, cap=self.cap)

        reports = await self._map(run, trials)
        passed = sum(report.passed for report in reports)
        table = []
        for index, envelope in enumerate(expected.envelopes):
            observed = Counter(r.observed[index] for r in reports if len(r.observed) > index)
            table.append(ProfileRow(d=envelope.d, expected=envelope, observed=dict(sorted(observed.items()))))
        result = TheoremResult(
            resolution=data.format(),
            points=points_count(data),
            trials=trials,
            passed=passed,
            pass_rate=round(passed / trials, 4),
            check_pass_rates={
                check: round(sum(r.checks[check] for r in reports) / trials, 4) for check in CHECKS
            },
            degenerate_resamples=sum(r.resamples for r in reports),
            failing_trials=[r.trial for r in reports if not r.passed],
            ggds_expected=expected.ggds_expected,
            profile_table=table,
        )
        summary = ReportSummary(
            passed=passed,
            failed=trials - passed,
            degenerate_resamples=result.degenerate_resamples,
            ok=passed / trials >= self.threshold,
        )
        inputs = {"resolution": data.format(), "trials": trials}
        return self._report("verify-theorem", inputs, [result.model_dump(mode="json")], summary, started)

    async def detloci(self, k: int | None = None, max_degree: int | None = None) -> Report:
        """Determinantal-locus checks for one k, or for every k in 1..3."""
        sizes = [k] if k is not None else list(range(1, MAX_K + 1))
        for size in sizes:
            if not 1 <= size <= MAX_K:
                raise UsageError(f"detloci needs 1 <= k <= {MAX_K}, got {size}")
            if max_degree is not None and max_degree < size + 2:
                raise UsageError(f"detloci needs a degree cap of at least k + 2 = {size + 2}")
        started = time.perf_counter()

        def run(index: int) -> list:
            size = sizes[index]
            return detloci_checks(size, max_degree if max_degree is not None else size + 4, self.field)

        per_size = await self._map(run, len(sizes))
        checks = [check for group in per_size for check in group]
        passed = sum(check.passed for check in checks)
        summary = ReportSummary(passed=passed, failed=len(checks) - passed, ok=passed == len(checks))
        inputs = {"k": sizes, "max_degree": max_degree}
        results = [check.model_dump(mode="json") for check in checks]
        return self._report("detloci", inputs, results, summary, started)

    async def examples(self) -> Report:
        """The six worked configurations and every claim made about them."""
        started = time.perf_counter()
        rows = await self._map(self._example_row, len(EXAMPLES))
        passed = sum(row.passed for row in rows)
        summary = ReportSummary(passed=passed, failed=len(rows) - passed, ok=passed == len(rows))
        results = [row.model_dump(mode="json") for row in rows]
        return self._report("examples", {"rows": len(EXAMPLES)}, results, summary, started)

    def _example_row(self, index: int) -> ExampleRow:
        name, build = EXAMPLES[index]
        rng = trial_rng(self.config.seed, "examples", index)
        try:
            claims, observed = build(self, rng)
        except (*COMPUTATION_ERRORS, HarnessError) as e:
            logger.warning("example_failed", row=index + 1, error=str(e))
            return ExampleRow(row=index + 1, name=name, claims={"computed": False}, passed=False)
        return ExampleRow(
            row=index + 1,
            name=name,
            claims=claims,
            observed=observed,
            passed=all(claims.values()),
        )

    def _analyzer(self, target: Any, rng: np.random.Generator) -> EnvelopeAnalyzer:
        return EnvelopeAnalyzer(target, seed_key=rng.integers(0, 2**62, size=2).tolist(), cap=self.cap)


def _is_curve(report: EnvelopeReport, degree: int) -> bool:
    return report.kind is EnvelopeKind.CURVE and report.curve_degree == degree


def _is_finite(report: EnvelopeReport, degree: int) -> bool:
    return (
        report.kind is EnvelopeKind.FINITE
        and report.scheme_degree == degree
        and report.distinct_count == degree
        and bool(report.reduced)
    )


ExampleOutcome = tuple[dict[str, bool], dict[str, Any]]


def _complete_intersection_example(harness: ExperimentHarness, rng: np.random.Generator) -> ExampleOutcome:
    ideal = complete_intersection((2, 3), rng, harness.field)
    analyzer = harness._analyzer(ideal, rng)
    z2, z3 = analyzer.classify_envelope(2), analyzer.classify_envelope(3)
    claims = {
        "Z_2 is the conic": _is_curve(z2, 2),
        "Z_3 = Z, six points": z3.kind is EnvelopeKind.EQUALS_Z and z3.scheme_degree == 6,
    }
    return claims, {"Z_2": z2.label, "Z_3": z3.label}


def _five_points_example(harness: ExperimentHarness, rng: np.random.Generator) -> ExampleOutcome:
    analyzer = harness._analyzer(sample_points_in_general_position(5, rng, harness.field), rng)
    ggds = analyzer.geometric_generating_degrees()
    z2 = analyzer.classify_envelope(2)
    claims = {"ggds = {2, 3}": ggds == [2, 3], "Z_2 is a smooth conic": _is_curve(z2, 2) and z2.smooth is True}
    return claims, {"ggds": ggds, "Z_2": z2.label}


def _eight_points_example(harness: ExperimentHarness, rng: np.random.Generator) -> ExampleOutcome:
    analyzer = harness._analyzer(sample_points_in_general_position(8, rng, harness.field), rng)
    ggds = analyzer.geometric_generating_degrees()
    z3 = analyzer.classify_envelope(3)
    claims = {"ggds = {3, 4}": ggds == [3, 4], "Z_3 is nine reduced points": _is_finite(z3, 9)}
    return claims, {"ggds": ggds, "Z_3": z3.label}


def _collinear_example(harness: ExperimentHarness, rng: np.random.Generator) -> ExampleOutcome:
    arrangement = collinear_arrangement(rng, harness.field)
    data = resolution_data(arrangement, cap=harness.cap)
    z2 = harness._analyzer(arrangement, rng).classify_envelope(2)
    claims = {
        "resolution data (2,2,3; 3,4)": data.a == (2, 2, 3) and data.b == (3, 4),
        "not positive": not is_positive(data),
        "Z_2 is the line plus a point": _is_curve(z2, 1) and z2.excess == 1,
    }
    return claims, {"resolution": data.format(), "Z_2": z2.label}


def _cubic_example(harness: ExperimentHarness, rng: np.random.Generator) -> ExampleOutcome:
    cubic = random_smooth_curve(3, rng, harness.field)
    analyzer = harness._analyzer(general_points_on_curve(cubic, 11, rng), rng)
    ggds = analyzer.geometric_generating_degrees()
    z3, z4, z5 = (analyzer.classify_envelope(d) for d in (3, 4, 5))
    claims = {
        "Z_3 is the cubic": _is_curve(z3, 3) and z3.smooth is True,
        "Z_4 is twelve reduced points": _is_finite(z4, 12),
        "Z_5 = Z": z5.kind is EnvelopeKind.EQUALS_Z,
        "ggds = {3, 4, 5}": ggds == [3, 4, 5],
    }
    return claims, {"ggds": ggds, "Z_3": z3.label, "Z_4": z4.label, "Z_5": z5.label}


def _eighteen_points_example(harness: ExperimentHarness, rng: np.random.Generator) -> ExampleOutcome:
    analyzer = harness._analyzer(sample_points_in_general_position(18, rng, harness.field), rng)
    degrees = analyzer.generator_degrees
    ggds = analyzer.geometric_generating_degrees()
    claims = {"generators in degrees 5, 5, 5, 6": degrees == [5, 5, 5, 6], "ggds = {5}": ggds == [5]}
    return claims, {"generator_degrees": degrees, "ggds": ggds}


EXAMPLES: list[tuple[str, Callable[[ExperimentHarness, np.random.Generator], ExampleOutcome]]] = [
    ("complete intersection of a conic and a cubic", _complete_intersection_example),
    ("five general points", _five_points_example),
    ("eight general points", _eight_points_example),
    ("three collinear points and one more", _collinear_example),
    ("eleven points on a smooth cubic", _cubic_example),
    ("eighteen general points", _eighteen_points_example),
]
