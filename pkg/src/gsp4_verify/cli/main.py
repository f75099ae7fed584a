"""
gsp4-verify CLI: unified entry point.

Usage:
    gsp4v branch --k 7 --kp 4 --p 6 --q 3
    gsp4v trace --k 7 --kp 4 --format json
    gsp4v local unramified-verify --order 25
    gsp4v verify --quick
"""

import logging

import click

from gsp4_verify import __version__


@click.group()
@click.version_option(version=__version__, prog_name="gsp4-verify")
@click.option("--verbose", is_flag=True, help="Log inner steps at DEBUG level")
@click.option("--precision-digits", type=int, default=None, help="Significant digits for numeric work (default: 30)")
@click.pass_context
def cli(ctx, verbose, precision_digits):
    """gsp4-verify: exact and numeric checks for the GSp(4) regulator computation."""
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )
    ctx.ensure_object(dict)
    ctx.obj["precision_digits"] = precision_digits


# Import and register subcommands
from gsp4_verify.cli.arch_cmd import arch  # noqa: E402
from gsp4_verify.cli.branch_cmd import branch  # noqa: E402
from gsp4_verify.cli.local_cmd import local  # noqa: E402
from gsp4_verify.cli.packet_cmd import hodge, packet  # noqa: E402
from gsp4_verify.cli.pairing_cmd import pairing  # noqa: E402
from gsp4_verify.cli.rep_cmd import lambda_scan_cmd, rep  # noqa: E402
from gsp4_verify.cli.trace_cmd import trace  # noqa: E402
from gsp4_verify.cli.verify_cmd import verify  # noqa: E402

cli.add_command(branch)
cli.add_command(packet)
cli.add_command(hodge)
cli.add_command(rep)
cli.add_command(lambda_scan_cmd)
cli.add_command(pairing)
cli.add_command(local)
cli.add_command(arch)
cli.add_command(trace)
cli.add_command(verify)


if __name__ == "__main__":
    cli()
