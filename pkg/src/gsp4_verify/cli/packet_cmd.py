"""
CLI commands: gsp4v packet, gsp4v hodge

Discrete-series packet data and Hodge types for a highest weight.
"""

import click

from gsp4_verify.cli.output import emit, handles_input_errors, output_options, project_config, working_digits
from gsp4_verify.core.errors import InputError
from gsp4_verify.core.packet import dual_hodge_types, gk_cohomology_dims, hodge_types, lpacket, stable_ranks
from gsp4_verify.core.roots import Weight
from gsp4_verify.models.config import CITATIONS
from gsp4_verify.models.results import VerificationReport


@click.command()
@click.option("--k", "k", type=int, required=True)
@click.option("--kp", "kp", type=int, required=True)
@click.option("--c", "c", type=int, required=True, help="Central index, k + k' = c (mod 2)")
@output_options
@handles_input_errors
def packet(k, kp, c, output_format, output_file, config_file):
    """L-packet, minimal K-types and ranks for lambda(k, k', c)."""
    config = project_config(config_file)
    digits = working_digits(config)

    lam = Weight(k, kp, c)
    info = lpacket(lam)
    report = VerificationReport("packet", citations=[CITATIONS["packet"], CITATIONS["ranks"]])
    report.add("Harish-Chandra parameter", info.hc_parameter)
    dims = gk_cohomology_dims(lam)
    for member in info.members:
        report.add(f"{member.label}: minimal K-type", member.minimal_k_type)
        report.add(f"{member.label}: dim H^3(g, K)", dims[member.label])
    try:
        betti, de_rham, ext = stable_ranks(lam)
        report.add("rank M_B^-(-1)", betti)
        report.add("rank F^0 M_dR", de_rham)
        report.add("rank Ext^1", ext)
    except InputError as e:
        report.add("stable ranks not available", str(e))

    emit([report], output_format, output_file, config, digits)


@click.command()
@click.option("--k", "k", type=int, required=True)
@click.option("--kp", "kp", type=int, required=True)
@click.option("--c", "c", type=int, default=None, help="Central index of the coefficient weight")
@click.option("--p", "p", type=int, default=None, help="With --q: use the dual weight lambda(k, k', -(p+q))")
@click.option("--q", "q", type=int, default=None)
@output_options
@handles_input_errors
def hodge(k, kp, c, p, q, output_format, output_file, config_file):
    """Hodge types (r, s) of the interior cohomology."""
    config = project_config(config_file)
    digits = working_digits(config)

    if p is not None and q is not None:
        result = dual_hodge_types(p, q, k, kp)
    elif c is not None:
        result = hodge_types(Weight(k, kp, c))
    else:
        raise InputError("give either --c or both --p and --q")

    report = VerificationReport("hodge", citations=[CITATIONS["hodge"]])
    report.add("t", result.t)
    for r, s in result.pairs:
        report.add(f"(r, s) = ({r}, {s})", r + s)
    if not result.is_swap_stable:
        report.fail("Hodge types not stable under (r, s) -> (s, r)", result.pairs)
    if len(set(result.sums())) != 1:
        report.fail("bidegrees with different total degree", result.sums())

    emit([report], output_format, output_file, config, digits)
