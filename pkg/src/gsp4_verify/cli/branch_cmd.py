"""
CLI command: gsp4v branch

Branching admissibility of (Sym^p x Sym^q) in the restriction of
lambda(k, k', p+q+6), checked against the character multiplicity.
"""

import click

from gsp4_verify.cli.output import emit, fail_input, handles_input_errors, output_options, project_config, working_digits
from gsp4_verify.core.roots import BranchQuery, branching_admissible, branching_decomposition
from gsp4_verify.models.config import CITATIONS
from gsp4_verify.models.results import BranchResult, VerificationReport
from gsp4_verify.utils.validators import validate_dominant, validate_pq


def branch_results(k: int, kp: int, p=None, q=None):
    """One query when (p, q) is given, otherwise every (p, q) of matching parity with p + q <= k + k'."""
    if p is not None and q is not None:
        queries = [(p, q)]
    else:
        queries = [(a, b) for a in range(k + kp + 1) for b in range(k + kp - a + 1) if (k + kp - a - b) % 2 == 0]
    out = []
    for a, b in queries:
        bq = BranchQuery.of(a, b, k, kp)
        multiplicity = branching_decomposition(bq.w).get((a, b), 0)
        out.append(BranchResult(a, b, k, kp, branching_admissible(bq), multiplicity))
    return out


@click.command()
@click.option("--k", "k", type=int, required=True, help="First highest-weight index")
@click.option("--kp", "kp", type=int, required=True, help="Second highest-weight index k'")
@click.option("--p", "p", type=int, default=None, help="Sym^p index (omit with --q to enumerate)")
@click.option("--q", "q", type=int, default=None, help="Sym^q index")
@output_options
@handles_input_errors
def branch(k, kp, p, q, output_format, output_file, config_file):
    """Branching admissibility with the character-theoretic oracle."""
    config = project_config(config_file)
    digits = working_digits(config)

    ok, reason = validate_dominant(k, kp)
    if not ok:
        fail_input(reason)
    if (p is None) != (q is None):
        fail_input("--p and --q must be given together")
    if p is not None:
        ok, reason = validate_pq(p, q)
        if not ok:
            fail_input(reason)

    report = VerificationReport("branch", citations=[CITATIONS["branching"]])
    for r in branch_results(k, kp, p, q):
        label = f"(p, q) = ({r.p}, {r.q}): admissible={r.admissible}"
        if r.consistent:
            report.add(label, r.multiplicity)
        else:
            report.fail(label + " disagrees with the oracle", r.multiplicity)

    emit([report], output_format, output_file, config, digits)
