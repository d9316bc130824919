"""Tests for the experiment harness commands and report rendering."""

import csv
import io
import json
from pathlib import Path
from typing import AsyncIterator

import numpy as np
import pytest
import pytest_asyncio

from app.models.report import Report, ReportSummary, RunConfig
from app.services.algebra import HomogeneousForm, PrimeField, form_eval
from app.services.arrangement import Arrangement, read_points, write_points
from app.services.harness import (
    EXAMPLES,
    EXIT_CHECK_FAILED,
    EXIT_OK,
    ExperimentHarness,
    exit_code,
    inputs_digest,
    render,
    trial_rng,
)
from app.services.harness.exceptions import UsageError
from app.services.harness.fixtures import _roots_mod_p, points_on_curve
from app.services.hilbertburch.exceptions import InvalidResolutionDataError, NonPositiveDataError


def _harness(trials: int = 3, seed: int = 11) -> ExperimentHarness:
    return ExperimentHarness(RunConfig(seed=seed, trials=trials, version="test"))


@pytest.fixture
def harness() -> ExperimentHarness:
    """Small-trial harness with a fixed seed."""
    return _harness()


@pytest_asyncio.fixture
async def analyzed(harness: ExperimentHarness, collinear_four: Arrangement, tmp_path: Path) -> AsyncIterator[Report]:
    """analyze report for three collinear points and one more."""
    path = write_points(tmp_path / "collinear.txt", collinear_four)
    yield await harness.analyze(path)


@pytest.mark.asyncio
async def test_analyze_collinear_points(analyzed: Report) -> None:
    """analyze reports data, Hilbert function and profile."""
    assert analyzed.command == "analyze"
    assert analyzed.summary.ok
    (result,) = analyzed.results
    assert result["n"] == 4
    assert result["resolution_text"] == "a=2,2,3 b=3,4"
    assert result["positive"] is False
    assert [entry["h"] for entry in result["hilbert_function"]] == [1, 3, 4, 4]
    assert result["profile"]["ggds"] == [2, 3]
    assert [r["kind"] for r in result["profile"]["reports"]] == ["plane", "curve", "equals_z"]


@pytest.mark.asyncio
async def test_sample_points_is_reproducible(tmp_path: Path, field: PrimeField) -> None:
    """Same seed, same points; another seed, other points."""
    first = await _harness(seed=7).sample_points(8, tmp_path / "a.txt")
    second = await _harness(seed=7).sample_points(8, tmp_path / "b.txt")
    other = await _harness(seed=8).sample_points(8, tmp_path / "c.txt")
    assert first.results[0]["points_digest"] == second.results[0]["points_digest"]
    assert first.results[0]["points_digest"] != other.results[0]["points_digest"]
    assert first.inputs_digest == other.inputs_digest
    assert read_points(tmp_path / "a.txt", field).points == read_points(tmp_path / "b.txt", field).points


@pytest.mark.asyncio
async def test_sample_points_rejects_empty_request(harness: ExperimentHarness, tmp_path: Path) -> None:
    """Asking for zero points is a usage error."""
    with pytest.raises(UsageError):
        await harness.sample_points(0, tmp_path / "none.txt")


@pytest.mark.asyncio
async def test_verify_theorem_for_two_conics(harness: ExperimentHarness) -> None:
    """Every trial for (2,2;4) ends at Z in degree 2."""
    report = await harness.verify_theorem("a=2,2 b=4")
    assert report.summary.ok
    (result,) = report.results
    assert result["points"] == 4
    assert result["trials"] == 3
    assert result["ggds_expected"] == [2]
    assert set(result["check_pass_rates"].values()) == {1.0}
    assert result["profile_table"][1]["observed"] == {"EqualsZ": 3}


@pytest.mark.asyncio
async def test_verify_theorem_rejects_bad_data(harness: ExperimentHarness) -> None:
    """Non-positive and inconsistent data are refused."""
    with pytest.raises(NonPositiveDataError):
        await harness.verify_theorem("a=2,2,3 b=3,4")
    with pytest.raises(InvalidResolutionDataError):
        await harness.verify_theorem("a=2,2 b=5")


@pytest.mark.asyncio
async def test_verify_generic_small_sizes(harness: ExperimentHarness) -> None:
    """Predictions hold for two to five general points."""
    report = await harness.verify_generic(2, 5)
    assert report.summary.ok
    assert [result["n"] for result in report.results] == [2, 3, 4, 5]
    assert report.results[3]["expected_resolution"] == "a=2,3,3 b=4,4"
    assert all(result["clause_failures"] == {} for result in report.results)


@pytest.mark.asyncio
async def test_verify_generic_range_checked(harness: ExperimentHarness) -> None:
    """The n range must start at 2 and not be empty."""
    with pytest.raises(UsageError):
        await harness.verify_generic(1, 4)
    with pytest.raises(UsageError):
        await harness.verify_generic(6, 5)


@pytest.mark.asyncio
async def test_detloci_for_k_one(harness: ExperimentHarness) -> None:
    """detloci for the 2 x 1 matrix, plus argument checks."""
    report = await harness.detloci(1)
    assert report.summary.ok
    assert report.summary.failed == 0
    checks = [result["check"] for result in report.results]
    assert checks[:2] == ["decomposition", "decomposition"]
    assert "codim_growth" in checks
    with pytest.raises(UsageError):
        await harness.detloci(4)
    with pytest.raises(UsageError):
        await harness.detloci(2, max_degree=3)


@pytest.mark.asyncio
@pytest.mark.parametrize("seed", [0, 3, 11])
async def test_worked_examples(seed: int) -> None:
    """Every claim of every worked example holds whatever the seed."""
    report = await _harness(seed=seed).examples()
    assert len(report.results) == len(EXAMPLES) == 6
    failed = {row["name"]: row["claims"] for row in report.results if not row["passed"]}
    assert not failed
    assert exit_code(report) == EXIT_OK


@pytest.mark.asyncio
async def test_reports_are_deterministic(tmp_path: Path) -> None:
    """Two runs with the same seed give the same report."""
    first = await _harness(seed=3).verify_theorem("a=2,2 b=4")
    second = await _harness(seed=3).verify_theorem("a=2,2 b=4")
    assert first.inputs_digest == second.inputs_digest
    assert first.results == second.results


def test_trial_streams_differ() -> None:
    """Commands draw from separate substreams."""
    assert trial_rng(1, "verify-theorem", 0).integers(2**32) != trial_rng(1, "examples", 0).integers(2**32)
    assert trial_rng(1, "examples", 2).integers(2**32) == trial_rng(1, "examples", 2).integers(2**32)


def test_inputs_digest_ignores_key_order() -> None:
    """The digest depends on inputs, not their order."""
    assert inputs_digest("detloci", {"k": [1], "max_degree": None}) == inputs_digest(
        "detloci", {"max_degree": None, "k": [1]}
    )
    assert inputs_digest("detloci", {"k": [1]}) != inputs_digest("detloci", {"k": [2]})


def _sample_report(ok: bool = True) -> Report:
    return Report(
        command="detloci",
        config=RunConfig(version="test"),
        inputs_digest="0" * 64,
        results=[
            {"check": "decomposition", "k": 1, "r": 1, "passed": True, "table": [{"e": 0}]},
            {"check": "codim_growth", "k": 1, "passed": ok, "detail": "observed 2, expected 2"},
        ],
        summary=ReportSummary(passed=2 if ok else 1, failed=0 if ok else 1, ok=ok),
    )


def test_render_json() -> None:
    """JSON output carries the run configuration."""
    payload = json.loads(render(_sample_report(), "json"))
    assert payload["command"] == "detloci"
    assert payload["config"]["prime"] == 32003
    assert payload["summary"]["ok"] is True


def test_render_csv() -> None:
    """CSV output has one row per result with JSON cells."""
    rows = list(csv.DictReader(io.StringIO(render(_sample_report(), "csv"))))
    assert len(rows) == 2
    assert rows[0]["table"] == '[{"e":0}]'
    assert rows[1]["r"] == ""
    assert rows[1]["detail"] == "observed 2, expected 2"


def test_render_text() -> None:
    """Text output has a header, numbered rows and a summary."""
    text = render(_sample_report(ok=False), "text")
    assert text.startswith("envelope-lab test detloci (prime=32003 seed=0)")
    assert "[2] check=codim_growth" in text
    assert text.rstrip().endswith("FAIL: 1 passed, 1 failed, 0 degenerate resamples")


def test_exit_codes() -> None:
    """Passing reports exit 0, failing ones exit 1."""
    assert exit_code(_sample_report()) == EXIT_OK
    assert exit_code(_sample_report(ok=False)) == EXIT_CHECK_FAILED


def test_points_on_curve_with_the_largest_prime() -> None:
    """Root finding factors over F_p instead of scanning every residue."""
    field = PrimeField(2147483647)
    x, y, z = (HomogeneousForm.variable(3, i, field) for i in range(3))
    fermat = x * x * x + y * y * y + z * z * z
    arrangement = points_on_curve(fermat, 6, np.random.default_rng(0))
    assert arrangement.n == 6
    assert all(form_eval(fermat, point.coords) == 0 for point in arrangement)


def test_roots_mod_p() -> None:
    """(z - 1)(z - 2)^2 = z^3 - 5z^2 + 8z - 4 has the roots 1 and 2."""
    assert _roots_mod_p(np.array([-4, 8, -5, 1]), 32003) == [1, 2]
    assert _roots_mod_p(np.array([1, 0, 1]), 32003) == []
    assert _roots_mod_p(np.array([7, 0, 0]), 32003) == []
