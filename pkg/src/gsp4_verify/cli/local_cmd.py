"""
CLI commands: gsp4v local unramified-verify|bessel|tate-unramified

Unramified local theory, all exact.
"""

import click

from gsp4_verify.cli.output import emit, fail_input, handles_input_errors, output_options, project_config, working_digits
from gsp4_verify.core.unramified import (
    bessel_support,
    bessel_value,
    verify_bessel_values,
    verify_tate_unramified,
    verify_unramified,
)
from gsp4_verify.models.config import NUMERIC_SAMPLES, TATE_SERIES_DEPTH, UNRAMIFIED_ORDER


@click.group()
def local():
    """Unramified local integrals."""


@local.command("unramified-verify")
@click.option("--order", type=int, default=UNRAMIFIED_ORDER, help=f"Series order (default: {UNRAMIFIED_ORDER})")
@click.option("--numeric", is_flag=True, help="Also compare at random rational Satake parameters")
@click.option("--seed", type=int, default=None, help="Seed for --numeric (default from config)")
@click.option("--samples", type=int, default=NUMERIC_SAMPLES, help="Random samples for --numeric")
@output_options
@handles_input_errors
def unramified_verify(order, numeric, seed, samples, output_format, output_file, config_file):
    """Bessel series against the spin L-factor, plus the antisymmetrizer identities."""
    config = project_config(config_file)
    digits = working_digits(config)
    if seed is None:
        seed = config.run.seed
    report = verify_unramified(order, numeric=numeric, seed=seed, samples=samples)
    emit([report], output_format, output_file, config, digits)


@local.command("bessel")
@click.option("--m", "m", type=int, required=True, help="Torus exponent")
@output_options
@handles_input_errors
def bessel(m, output_format, output_file, config_file):
    """Bessel value c_m and its check against h_m(alpha_1..alpha_4)."""
    config = project_config(config_file)
    digits = working_digits(config)
    if m < 0:
        report = verify_bessel_values(0)
        report.add(f"m = {m} < 0: Bessel function vanishes", bessel_support(m))
    else:
        report = verify_bessel_values(m)
        report.add(f"c_{m}", bessel_value(m))
        report.add("p-power exponent", bessel_support(m))
    emit([report], output_format, output_file, config, digits)


@local.command("tate-unramified")
@click.option("--target", type=int, required=True, help="Exponent of u = p^-1 in the Euler factor")
@click.option("--depth", type=int, default=TATE_SERIES_DEPTH, help="Valuation sum depth")
@output_options
@handles_input_errors
def tate_unramified(target, depth, output_format, output_file, config_file):
    """Unramified Tate integral as a sum over valuations."""
    config = project_config(config_file)
    digits = working_digits(config)
    if depth < 1:
        fail_input(f"depth must be at least 1, got {depth}")
    emit([verify_tate_unramified(target, depth)], output_format, output_file, config, digits)
