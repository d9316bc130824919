"""Pydantic models for run configuration, command results and reports."""

from typing import Any, Literal, Optional

from pydantic import BaseModel, Field

from app.models.envelope import EnvelopeProfile, ExpectedEnvelope
from app.models.resolution import ResolutionData

OutputFormat = Literal["json", "csv", "text"]


class RunConfig(BaseModel):
    """Effective configuration of one command run, echoed in its report."""

    prime: int = 32003
    seed: int = Field(default=0, ge=0, lt=2**64)
    trials: int = Field(default=50, ge=1)
    max_degree_cap: Optional[int] = None
    output_format: OutputFormat = "json"
    version: str


class ReportSummary(BaseModel):
    """Pass/fail totals for a report."""

    passed: int = 0
    failed: int = 0
    degenerate_resamples: int = 0
    ok: bool = True


class Report(BaseModel):
    """Machine-readable output of a command."""

    command: str
    config: RunConfig
    inputs_digest: str = Field(..., description="sha256 of the canonical command inputs")
    results: list[dict[str, Any]]
    summary: ReportSummary
    timings_ms: dict[str, float] = Field(default_factory=dict)


class HilbertEntry(BaseModel):
    e: int
    h: int


class AnalyzeResult(BaseModel):
    """Invariants of one point arrangement."""

    n: int
    hilbert_function: list[HilbertEntry]
    resolution: ResolutionData
    resolution_text: str
    positive: bool
    profile: EnvelopeProfile


class SampleResult(BaseModel):
    n: int
    path: str
    seed: int
    points_digest: str


class GenericSizeResult(BaseModel):
    """Outcome of the general-points checks for one arrangement size."""

    n: int
    d: int
    r: int
    expected_resolution: str
    positive: bool
    trials: int
    passed: int
    pass_rate: float
    clause_failures: dict[str, int]
    failing_trials: list[int]


class HBTrialReport(BaseModel):
    """One sampled Hilbert-Burch matrix and the checks run on its minors."""

    trial: int
    resamples: int = 0
    checks: dict[str, bool]
    observed: list[str] = Field(default_factory=list, description="Envelope labels for d = 1..a_{k+1}")
    ggds: list[int] = Field(default_factory=list)
    error: Optional[str] = None

    @property
    def passed(self) -> bool:
        return self.error is None and all(self.checks.values())


class ProfileRow(BaseModel):
    d: int
    expected: ExpectedEnvelope
    observed: dict[str, int] = Field(..., description="Observed label -> trial count")


class TheoremResult(BaseModel):
    """Aggregate of verify_hb_sample trials for one resolution datum."""

    resolution: str
    points: int
    trials: int
    passed: int
    pass_rate: float
    check_pass_rates: dict[str, float]
    degenerate_resamples: int
    failing_trials: list[int]
    ggds_expected: list[int]
    profile_table: list[ProfileRow]


class DimensionRow(BaseModel):
    """Graded dimensions behind I_r = I_{k+1} ∩ J_r in one degree."""

    e: int
    dim_ir: int
    dim_ik1: int
    dim_jr: int
    dim_sum: int
    dim_intersection: int
    contained: bool
    holds: bool


class DetLociCheck(BaseModel):
    check: str
    k: int
    r: Optional[int] = None
    passed: bool
    skipped: bool = False
    detail: str = ""
    table: list[DimensionRow] = Field(default_factory=list)


class ExampleRow(BaseModel):
    row: int
    name: str
    claims: dict[str, bool]
    observed: dict[str, Any] = Field(default_factory=dict)
    passed: bool
