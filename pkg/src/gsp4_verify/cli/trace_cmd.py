"""
CLI command: gsp4v trace

Assembles the pairing for (k, k'), keeps the surviving term and reports
the net power of pi against the quoted one.
"""

import click

from gsp4_verify.cli.output import emit, handles_input_errors, output_options, project_config, working_digits
from gsp4_verify.core.trace import trace_report


@click.command()
@click.option("--k", "k", type=int, required=True, help="First weight, k odd")
@click.option("--kp", "kp", type=int, required=True, help="Second weight, k' even, 0 < k' < k")
@output_options
@handles_input_errors
def trace(k, kp, output_format, output_file, config_file):
    """Net power of pi of the surviving term."""
    config = project_config(config_file)
    emit([trace_report(k, kp)], output_format, output_file, config, working_digits(config))
