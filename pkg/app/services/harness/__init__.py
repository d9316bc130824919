"""Command orchestration, example fixtures and report rendering."""

from app.services.harness.orchestrator import EXAMPLES, ExperimentHarness, inputs_digest, trial_rng
from app.services.harness.report import EXIT_CHECK_FAILED, EXIT_OK, EXIT_USAGE, exit_code, render

__all__ = [
    "ExperimentHarness",
    "EXAMPLES",
    "inputs_digest",
    "trial_rng",
    "render",
    "exit_code",
    "EXIT_OK",
    "EXIT_CHECK_FAILED",
    "EXIT_USAGE",
]
