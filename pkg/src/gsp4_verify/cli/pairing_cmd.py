"""
CLI commands: gsp4v pairing constants|coeffs|assemble|survival|normalized
"""

from fractions import Fraction

import click

from gsp4_verify.cli.output import emit, fail_input, handles_input_errors, output_options, project_config, working_digits
from gsp4_verify.core import pairing as core_pairing
from gsp4_verify.models.config import CITATIONS, QUOTED_BETA3
from gsp4_verify.models.results import VerificationReport
from gsp4_verify.utils.validators import validate_dominant


@click.group()
def pairing():
    """Constants and assembly of the regulator pairing."""


@pairing.command("constants")
@click.option("--k", "k", type=int, required=True)
@click.option("--kp", "kp", type=int, required=True)
@output_options
@handles_input_errors
def constants_cmd(k, kp, output_format, output_file, config_file):
    """A_(i,j), B_i, C_i for every index in range."""
    config = project_config(config_file)
    digits = working_digits(config)

    ok, reason = validate_dominant(k, kp)
    if not ok:
        fail_input(reason)
    table = core_pairing.constants(k, kp)
    report = VerificationReport("pairing-constants", citations=[CITATIONS["constants"]])
    for (i, j), value in sorted(table.A.items()):
        report.add(f"A_({i},{j})", value)
    for i, value in sorted(table.B.items()):
        report.add(f"B_{i}", value)
    for i, value in sorted(table.C.items()):
        report.add(f"C_{i}", value)

    emit([report], output_format, output_file, config, digits)


@pairing.command("coeffs")
@output_options
@handles_input_errors
def coeffs_cmd(output_format, output_file, config_file):
    """Projection coefficients alpha, beta3, gamma: computed against quoted."""
    config = project_config(config_file)
    emit([core_pairing.verify_projection_coeffs()], output_format, output_file, config, working_digits(config))


@pairing.command("assemble")
@click.option("--k", "k", type=int, required=True)
@click.option("--kp", "kp", type=int, required=True)
@click.option("--p", "p", type=int, default=None, help="Default k - 1")
@click.option("--q", "q", type=int, default=None, help="Default k' - 1")
@click.option(
    "--beta3",
    "beta3_source",
    type=click.Choice(["quoted", "computed"]),
    default="quoted",
    help="Use the quoted 3/80 or the exact solve for beta3",
)
@output_options
@handles_input_errors
def assemble_cmd(k, kp, p, q, beta3_source, output_format, output_file, config_file):
    """The four terms with their integral tokens."""
    config = project_config(config_file)
    digits = working_digits(config)

    p = k - 1 if p is None else p
    q = kp - 1 if q is None else q
    beta3 = QUOTED_BETA3 if beta3_source == "quoted" else core_pairing.projection_coeffs().beta3
    expression = core_pairing.assemble(p, q, k, kp, beta3=Fraction(beta3))

    report = VerificationReport("assemble", citations=[CITATIONS["assemble"], CITATIONS["projection"]])
    report.add("beta3", expression.beta3)
    for term in expression.terms:
        summands = " + ".join(f"({factor}) {token}" for factor, token in term.summands)
        report.add(f"term {term.index} [{term.constant_label} = {term.coefficient}]", summands)

    emit([report], output_format, output_file, config, digits)


@pairing.command("survival")
@click.option("--k", "k", type=int, required=True)
@click.option("--kp", "kp", type=int, required=True)
@output_options
@handles_input_errors
def survival_cmd(k, kp, output_format, output_file, config_file):
    """Archimedean weight rule on each assembled term."""
    config = project_config(config_file)
    emit([core_pairing.survival_report(k, kp)], output_format, output_file, config, working_digits(config))


@pairing.command("normalized")
@click.option("--k", "k", type=int, required=True)
@click.option("--kp", "kp", type=int, required=True)
@output_options
@handles_input_errors
def normalized_cmd(k, kp, output_format, output_file, config_file):
    """Survivor pairing against a_0 (x) a_q: natural and quoted normalizations."""
    config = project_config(config_file)
    result = core_pairing.normalized_pairing(k, kp)
    report = VerificationReport("normalized-pairing", citations=[CITATIONS["assemble"]])
    report.add("(-1)^p (2i)^(-p-q)", result.natural)
    report.add("quoted (-1)^p (2i)^(-k-k'-2)", result.quoted)
    report.add("ratio", result.ratio)
    emit([report], output_format, output_file, config, working_digits(config))
