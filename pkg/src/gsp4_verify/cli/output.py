"""
Opzioni e uscita condivise dai sottocomandi.

Ogni comando produce una lista di VerificationReport; qui si applicano i
defaults di .gsp4-verify.yml (la CLI ha precedenza), si formatta, si
scrive su file o stdout e si esce con il codice giusto.
"""

import functools
import sys
from pathlib import Path
from typing import Callable, List, Optional

import click

from gsp4_verify.core.errors import InputError, PrecisionError, UnsupportedArgumentError
from gsp4_verify.models.config import EXIT_FAILURE, EXIT_INPUT, EXIT_OK, OUTPUT_FORMATS
from gsp4_verify.models.project_config import ProjectConfig, load_config
from gsp4_verify.models.results import VerificationReport
from gsp4_verify.utils.validators import validate_digits, validate_safe_path


def output_options(command: Callable) -> Callable:
    """--format, --output e --config."""
    command = click.option("--config", "config_file", default=None, help="Path to .gsp4-verify.yml config file")(
        command
    )
    command = click.option("--output", "output_file", default=None, help="Output file path (optional)")(command)
    command = click.option(
        "--format",
        "output_format",
        type=click.Choice(OUTPUT_FORMATS),
        default=None,
        help="Output format: text (default), json, csv or rich",
    )(command)
    return command


def project_config(config_file: Optional[str]) -> ProjectConfig:
    return load_config(Path(config_file) if config_file else None)


def working_digits(config: ProjectConfig) -> int:
    """--precision-digits del gruppo, altrimenti il file di configurazione."""
    ctx = click.get_current_context()
    override = (ctx.obj or {}).get("precision_digits")
    digits = override if override is not None else config.precision.digits
    ok, reason = validate_digits(digits)
    if not ok:
        fail_input(reason)
    return digits


def fail_input(message: str) -> None:
    click.echo(f"\n❌ ERROR: {message}", err=True)
    sys.exit(EXIT_INPUT)


def handles_input_errors(command: Callable) -> Callable:
    """InputError e argomenti non classificabili escono con 2, PrecisionError con 1."""

    @functools.wraps(command)
    def wrapper(*args, **kwargs):
        try:
            return command(*args, **kwargs)
        except (InputError, UnsupportedArgumentError) as e:
            fail_input(str(e))
        except PrecisionError as e:
            click.echo(f"\n❌ ERROR: {e}", err=True)
            sys.exit(EXIT_FAILURE)

    return wrapper


def emit(
    reports: List[VerificationReport],
    output_format: Optional[str],
    output_file: Optional[str],
    config: ProjectConfig,
    digits: int,
) -> None:
    from gsp4_verify.cli.formatters import format_reports

    # Applica defaults da config (CLI ha precedenza)
    if output_format is None:
        output_format = config.output.format if config.output.format in OUTPUT_FORMATS else "text"
    if output_file is None:
        output_file = config.output.output

    output = format_reports(reports, output_format, digits)

    if output_file:
        ok, reason = validate_safe_path(output_file)
        if not ok:
            fail_input(reason)
        with open(output_file, "w", encoding="utf-8") as f:
            f.write(output)
        click.echo(f"✅ Report written to: {output_file}")
    else:
        click.echo(output)

    sys.exit(EXIT_OK if all(r.passed for r in reports) else EXIT_FAILURE)
