#!/usr/bin/env python3
"""
Command-line entry point for envelope experiments.

Commands:
    analyze          Hilbert function, resolution data and envelopes of a point file
    sample-points    Write n general points to a point file
    verify-generic   Check the general-points predictions for a range of n
    verify-theorem   Monte-Carlo check of a resolution datum's predicted envelopes
    detloci          Graded checks of the determinantal-locus decomposition
    examples         The six worked configurations

Usage:
    python scripts/envelope_lab.py analyze points.txt --format text
    python scripts/envelope_lab.py sample-points 8 eight.txt --seed 7
    python scripts/envelope_lab.py verify-theorem "a=3,3,4 b=5,5" --trials 50
    python scripts/envelope_lab.py detloci --k 2

Exit codes:
    0 = every check passed
    1 = a mathematical check failed
    2 = input or usage error
"""

import argparse
import asyncio
import sys
from pathlib import Path

# Add project root to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from pydantic import ValidationError

try:
    from app.core.config import Settings
except ValidationError as e:
    print(f"ERROR: invalid ENVELOPE_LAB_ environment: {e}", file=sys.stderr)
    sys.exit(2)

from app import __version__
from app.core.logging import get_logger, setup_logging
from app.models.report import Report, RunConfig
from app.services.algebra.exceptions import AlgebraError
from app.services.arrangement.exceptions import ArrangementError, DuplicatePointError, PointFileError
from app.services.detloci.exceptions import DetLociError, UnsupportedSizeError
from app.services.envelope.exceptions import EnvelopeError
from app.services.gradedla.exceptions import GradedAlgebraError
from app.services.harness import EXIT_CHECK_FAILED, EXIT_USAGE, ExperimentHarness, exit_code, render
from app.services.harness.exceptions import HarnessError, UsageError
from app.services.hilbertburch.exceptions import (
    HilbertBurchError,
    InvalidResolutionDataError,
    NonPositiveDataError,
)

logger = get_logger(__name__)

INPUT_ERRORS = (
    UsageError,
    PointFileError,
    DuplicatePointError,
    InvalidResolutionDataError,
    NonPositiveDataError,
    UnsupportedSizeError,
    OSError,
)
CHECK_ERRORS = (
    AlgebraError,
    GradedAlgebraError,
    ArrangementError,
    EnvelopeError,
    HilbertBurchError,
    DetLociError,
    HarnessError,
)


async def run_command(args: argparse.Namespace, harness: ExperimentHarness) -> Report:
    if args.command == "analyze":
        return await harness.analyze(args.points_file)
    if args.command == "sample-points":
        return await harness.sample_points(args.n, args.out_file)
    if args.command == "verify-generic":
        return await harness.verify_generic(args.n_min, args.n_max)
    if args.command == "verify-theorem":
        return await harness.verify_theorem(args.resolution)
    if args.command == "detloci":
        return await harness.detloci(args.k, args.max_degree)
    return await harness.examples()


async def main(args: argparse.Namespace) -> int:
    """Run one command and return its exit code."""
    overrides = {
        "prime": args.prime,
        "seed": args.seed,
        "trials": args.trials,
        "max_degree_cap": args.max_degree,
        "output_format": args.format,
    }
    try:
        run_settings = Settings(**{k: v for k, v in overrides.items() if v is not None})
    except ValidationError as e:
        print(f"ERROR: {e}", file=sys.stderr)
        return EXIT_USAGE

    setup_logging(run_settings.debug or args.verbose)
    config = RunConfig(
        prime=run_settings.prime,
        seed=run_settings.seed,
        trials=run_settings.trials,
        max_degree_cap=run_settings.max_degree_cap,
        output_format=run_settings.output_format,
        version=__version__,
    )
    harness = ExperimentHarness(config, run_settings.pass_rate_threshold)

    try:
        report = await run_command(args, harness)
    except INPUT_ERRORS as e:
        logger.error("command_rejected", command=args.command, error=str(e))
        print(f"ERROR: {e}", file=sys.stderr)
        return EXIT_USAGE
    except CHECK_ERRORS as e:
        logger.error("command_failed", command=args.command, error=str(e))
        print(f"FAILED: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_CHECK_FAILED

    output = render(report, config.output_format)
    if args.out:
        try:
            Path(args.out).write_text(output, encoding="utf-8")
        except OSError as e:
            print(f"ERROR: cannot write {args.out}: {e}", file=sys.stderr)
            return EXIT_USAGE
    else:
        sys.stdout.write(output)
    return exit_code(report)


def parse_args(argv: list[str] | None = None) -> argparse.Namespace:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--prime", type=int, help="Modulus p of the coefficient field")
    common.add_argument("--seed", type=int, help="Base seed for all random draws")
    common.add_argument("--trials", type=int, help="Monte-Carlo trials per item")
    common.add_argument(
        "--max-degree",
        type=int,
        help="Hilbert window cap; for detloci, the degree E checked up to",
    )
    common.add_argument("--format", choices=["json", "csv", "text"], help="Report format")
    common.add_argument("--out", help="Write the report to this file instead of stdout")
    common.add_argument("--verbose", action="store_true", help="Human-readable debug logs on stderr")

    parser = argparse.ArgumentParser(
        prog="envelope-lab",
        description="Degree envelopes of finite point sets in the projective plane",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    analyze = subparsers.add_parser("analyze", parents=[common], help="Analyze a point file")
    analyze.add_argument("points_file", help="One point per line: three integers")

    sample = subparsers.add_parser("sample-points", parents=[common], help="Sample general points")
    sample.add_argument("n", type=int, help="Number of points")
    sample.add_argument("out_file", help="Point file to write")

    generic = subparsers.add_parser(
        "verify-generic", parents=[common], help="Check the general-points predictions"
    )
    generic.add_argument("--n-min", type=int, default=2, help="Smallest arrangement size")
    generic.add_argument("--n-max", type=int, default=20, help="Largest arrangement size")

    theorem = subparsers.add_parser(
        "verify-theorem", parents=[common], help="Check a resolution datum's predicted envelopes"
    )
    theorem.add_argument("resolution", help='Resolution data such as "a=3,3,4 b=5,5"')

    detloci = subparsers.add_parser("detloci", parents=[common], help="Determinantal-locus checks")
    detloci.add_argument("--k", type=int, default=None, help="Matrix size k (all of 1..3 by default)")

    subparsers.add_parser("examples", parents=[common], help="Check the six worked examples")
    return parser.parse_args(argv)


if __name__ == "__main__":
    args = parse_args()
    sys.exit(asyncio.run(main(args)))
