"""Rendering reports as JSON, CSV or plain text, and mapping them to exit codes."""

import csv
import io
import json
from typing import Any

from app.models.report import OutputFormat, Report

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2


def _cell(value: Any) -> str:
    if isinstance(value, (dict, list)):
        return json.dumps(value, sort_keys=True, separators=(",", ":"))
    if value is None:
        return ""
    return str(value)


def render_json(report: Report) -> str:
    return report.model_dump_json(indent=2) + "\n"


def render_csv(report: Report) -> str:
    """One row per result; nested values are written as compact JSON."""
    fieldnames: list[str] = []
    for result in report.results:
        for key in result:
            if key not in fieldnames:
                fieldnames.append(key)
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=fieldnames, lineterminator="\n")
    writer.writeheader()
    for result in report.results:
        writer.writerow({key: _cell(result.get(key)) for key in fieldnames})
    return buffer.getvalue()


def render_text(report: Report) -> str:
    config = report.config
    lines = [
        f"envelope-lab {config.version} {report.command} (prime={config.prime} seed={config.seed})",
        "",
    ]
    for index, result in enumerate(report.results, start=1):
        scalars = {k: v for k, v in result.items() if not isinstance(v, (dict, list))}
        lines.append(f"[{index}] " + " ".join(f"{k}={_cell(v)}" for k, v in scalars.items()))
        for key, value in result.items():
            if isinstance(value, dict) and value:
                lines.append(f"    {key}: {_cell(value)}")
    summary = report.summary
    status = "PASS" if summary.ok else "FAIL"
    lines.append("")
    lines.append(
        f"{status}: {summary.passed} passed, {summary.failed} failed, "
        f"{summary.degenerate_resamples} degenerate resamples"
    )
    return "\n".join(lines) + "\n"


def render(report: Report, output_format: OutputFormat) -> str:
    if output_format == "json":
        return render_json(report)
    if output_format == "csv":
        return render_csv(report)
    return render_text(report)


def exit_code(report: Report) -> int:
    return EXIT_OK if report.summary.ok else EXIT_CHECK_FAILED
