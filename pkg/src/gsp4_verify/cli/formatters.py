"""
Output formatters for the CLI.

Handles text, JSON and CSV output for verification reports. Exact values
are rendered as strings ("3/80", "1/4 + 1/2*i"), mpmath numbers with the
requested number of significant digits.
"""

import csv
import io
import json
from dataclasses import fields, is_dataclass
from fractions import Fraction
from typing import Any, List, Sequence

import mpmath

from gsp4_verify.models.config import DEFAULT_PRECISION_DIGITS
from gsp4_verify.models.results import STATUS_FAIL, STATUS_PASS, STATUS_SKIPPED, VerificationReport


def render_value(value: Any, digits: int = DEFAULT_PRECISION_DIGITS) -> Any:
    """JSON-friendly rendering; exact objects become strings."""
    if value is None or isinstance(value, (bool, int, str)):
        return value
    if isinstance(value, float):
        return value
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, (mpmath.mpf, mpmath.mpc)):
        return mpmath.nstr(value, digits)
    if isinstance(value, dict):
        return {str(k): render_value(v, digits) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [render_value(v, digits) for v in value]
    if is_dataclass(value) and not isinstance(value, type):
        return {f.name: render_value(getattr(value, f.name), digits) for f in fields(value)}
    return str(value)


def report_to_dict(report: VerificationReport, digits: int = DEFAULT_PRECISION_DIGITS) -> dict:
    return {
        "check": report.check,
        "status": report.status,
        "witnesses": [
            {"description": w.description, "value": render_value(w.value, digits), "error": w.error}
            for w in report.witnesses
        ],
        "citations": list(report.citations),
        "seed": report.seed,
        "elapsedMs": report.elapsed_ms,
        "timestamp": report.timestamp,
    }


def format_report_json(report: VerificationReport, digits: int = DEFAULT_PRECISION_DIGITS) -> str:
    """Format a VerificationReport as JSON string."""
    return json.dumps(report_to_dict(report, digits), indent=2)


def format_reports_json(reports: Sequence[VerificationReport], digits: int = DEFAULT_PRECISION_DIGITS) -> str:
    if len(reports) == 1:
        return format_report_json(reports[0], digits)
    data = {
        "status": "pass" if all(r.passed for r in reports) else "fail",
        "reports": [report_to_dict(r, digits) for r in reports],
    }
    return json.dumps(data, indent=2)


def format_report_text(report: VerificationReport, digits: int = DEFAULT_PRECISION_DIGITS) -> str:
    """Format a VerificationReport as human-readable text."""
    lines = []
    lines.append(_section_header(f"{report.check.upper()} — {_status_label(report)}"))
    for w in report.witnesses:
        value = render_value(w.value, digits)
        line = f"  • {w.description}"
        if value is not None:
            line += f": {value}"
        if w.error is not None:
            line += f"  (err {w.error:.3g})"
        lines.append(line)
    if report.citations:
        lines.append("")
        for c in report.citations:
            lines.append(f"  ↳ {c}")
    if report.seed is not None:
        lines.append(f"  seed: {report.seed}")
    if report.elapsed_ms:
        lines.append(f"  elapsed: {report.elapsed_ms} ms")
    return "\n".join(lines)


def format_reports_text(reports: Sequence[VerificationReport], digits: int = DEFAULT_PRECISION_DIGITS) -> str:
    blocks = [format_report_text(r, digits) for r in reports]
    if len(reports) > 1:
        passed = sum(1 for r in reports if r.passed)
        blocks.append("")
        blocks.append(f"  {passed}/{len(reports)} checks passed")
    return "\n\n".join(blocks)


def format_rows_csv(reports: Sequence[VerificationReport], digits: int = DEFAULT_PRECISION_DIGITS) -> str:
    """One row per witness: check, status, description, value, error."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["check", "status", "description", "value", "error"])
    for report in reports:
        for w in report.witnesses:
            value = render_value(w.value, digits)
            if isinstance(value, (list, dict)):
                value = json.dumps(value)
            writer.writerow([report.check, report.status, w.description, value, "" if w.error is None else w.error])
    return buffer.getvalue()


def _status_label(report: VerificationReport) -> str:
    labels = {STATUS_PASS: "✅ PASS", STATUS_FAIL: "❌ FAIL", STATUS_SKIPPED: "⏭️  SKIPPED"}
    return labels.get(report.status, report.status)


def _section_header(text: str) -> str:
    width = 60
    return f"{'=' * width}\n  {text}\n{'=' * width}"


def format_reports(reports: List[VerificationReport], output_format: str, digits: int) -> str:
    """Dispatch by format; rich falls back to text when unavailable."""
    if output_format == "json":
        return format_reports_json(reports, digits)
    if output_format == "csv":
        return format_rows_csv(reports, digits)
    if output_format == "rich":
        from gsp4_verify.cli.rich_formatter import format_reports_rich, is_rich_available

        if is_rich_available():
            return format_reports_rich(reports, digits)
        import click

        click.echo("⚠️  rich non installato. Usa: pip install gsp4-verify[rich]", err=True)
    return format_reports_text(reports, digits)
