"""
CLI commands: gsp4v rep build, gsp4v lambda-scan

Explicit construction of the algebraic representation and the scan of
the isotypic components of X_(1,-1)^i v.
"""

import click

from gsp4_verify.cli.output import emit, fail_input, handles_input_errors, output_options, project_config, working_digits
from gsp4_verify.core.reps import build_irrep, check_brackets, lambda_scan
from gsp4_verify.core.roots import Weight, weyl_dimension
from gsp4_verify.models.config import CITATIONS
from gsp4_verify.models.results import VerificationReport
from gsp4_verify.utils.validators import validate_weight


@click.group()
def rep():
    """Algebraic representations of sp(4)."""


@rep.command("build")
@click.option("--k", "k", type=int, required=True)
@click.option("--kp", "kp", type=int, required=True)
@click.option("--c", "c", type=int, default=None, help="Central index (default: (k + k') mod 2)")
@click.option("--max-degree", type=int, default=None, help="Upper bound on k + k' (default from config)")
@click.option("--brackets", is_flag=True, help="Also check every bracket relation on the basis (slow)")
@output_options
@handles_input_errors
def build(k, kp, c, max_degree, brackets, output_format, output_file, config_file):
    """Build lambda(k, k', c) and compare with the Weyl dimension."""
    config = project_config(config_file)
    digits = working_digits(config)

    c = (k + kp) % 2 if c is None else c
    ok, reason = validate_weight(k, kp, c)
    if not ok:
        fail_input(reason)
    lam = Weight(k, kp, c)
    module = build_irrep(lam, max_degree if max_degree is not None else config.bounds.max_degree)

    report = VerificationReport("rep-build", citations=[CITATIONS["irrep"], CITATIONS["weyl-dimension"]])
    expected = weyl_dimension(lam)
    if module.dimension == expected:
        report.add("dimension = Weyl dimension", expected)
    else:
        report.fail("dimension differs from Weyl dimension", module.dimension, expected)
    for weight, mult in sorted(module.weight_multiplicities().items(), reverse=True):
        report.add(f"weight {weight}", mult)
    if brackets:
        if check_brackets(module):
            report.add("bracket relations hold", True)
        else:
            report.fail("bracket relations fail", False)

    emit([report], output_format, output_file, config, digits)


@click.command("lambda-scan")
@click.option("--k", "k", type=int, required=True)
@click.option("--kp", "kp", type=int, required=True)
@click.option("--i", "indices", type=int, multiple=True, help="Powers i to scan (repeatable, default: 1)")
@click.option("--p", "p", type=int, default=None, help="Default k - 1")
@click.option("--q", "q", type=int, default=None, help="Default k' - 1")
@output_options
@handles_input_errors
def lambda_scan_cmd(k, kp, indices, p, q, output_format, output_file, config_file):
    """Isotypic component of X_(1,-1)^i v for each requested i."""
    config = project_config(config_file)
    digits = working_digits(config)

    if not k > kp > 0:
        fail_input(f"k > k' > 0 fails: (k, k') = ({k}, {kp})")
    rows = lambda_scan(k, kp, indices or (1,), p, q, config.bounds.max_degree)

    report = VerificationReport("lambda-scan", citations=[CITATIONS["lambda-scan"], CITATIONS["cayley"]])
    default_pq = p in (None, k - 1) and q in (None, kp - 1)
    for row in rows:
        label = f"i = {row.i}, (r, s) = {row.pair}, non-zero = {row.nonzero}"
        if row.i == 1 and default_pq and not row.nonzero:
            report.fail(label, row.scalar)
        else:
            report.add(label, row.scalar)

    emit([report], output_format, output_file, config, digits)
