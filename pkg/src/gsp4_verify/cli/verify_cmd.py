"""
CLI command: gsp4v verify

Runs the registered checks (built-in plus the ``gsp4_verify.checks``
entry points) and prints one report per check.
"""

import logging
import random

import click

from gsp4_verify.cli.output import emit, fail_input, handles_input_errors, output_options, project_config, working_digits
from gsp4_verify.core.checks import register_builtin_checks
from gsp4_verify.core.registry import CheckRegistry

logger = logging.getLogger(__name__)


@click.command()
@click.option("--only", "only", multiple=True, help="Run only this check (repeatable)")
@click.option("--quick", is_flag=True, help="Smaller grids")
@click.option("--seed", type=int, default=None, help="Seed for the random checks (default from config, else random)")
@click.option("--no-plugins", is_flag=True, help="Skip checks registered through entry points")
@click.option("--list", "list_checks", is_flag=True, help="List the available checks and exit")
@output_options
@handles_input_errors
def verify(only, quick, seed, no_plugins, list_checks, output_format, output_file, config_file):
    """Run every acceptance check."""
    config = project_config(config_file)
    digits = working_digits(config)

    register_builtin_checks()
    if not no_plugins:
        loaded = CheckRegistry.load_entry_points()
        if loaded:
            logger.info("%d plugin check(s) loaded", loaded)

    if list_checks:
        for check in sorted(CheckRegistry.all(), key=lambda c: c.name):
            click.echo(f"{check.name:<26} {check.description}")
        return

    unknown = [name for name in only if CheckRegistry.get(name) is None]
    if unknown:
        fail_input(f"unknown check(s): {', '.join(unknown)}. Available: {', '.join(CheckRegistry.names())}")

    if seed is None:
        seed = config.run.seed
    if seed is None:
        seed = random.SystemRandom().randrange(2**32)

    reports = CheckRegistry.run_all(
        list(only) or None, quick=quick, seed=seed, digits=digits, grid_max=config.bounds.grid_max
    )
    for report in reports:
        if report.seed is None:
            report.seed = seed
    emit(reports, output_format, output_file, config, digits)
