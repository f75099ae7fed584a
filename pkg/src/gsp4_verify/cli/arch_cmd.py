"""
CLI commands: gsp4v arch mellin-verify|tate-verify|meijer|bessel-radial|gamma|pi-class

Archimedean computations under mpmath with --precision-digits digits.
"""

from fractions import Fraction

import click

from gsp4_verify.cli.output import emit, fail_input, handles_input_errors, output_options, project_config, working_digits
from gsp4_verify.core.archimedean import (
    arch_vanishing,
    bessel_radial,
    meijer_g,
    meijer_params,
    mellin_verify,
    pi_power_class,
    survivor_params,
    survivor_weights,
    tate_arch_verify,
    verify_gamma,
)
from gsp4_verify.core.pairing import SURVIVAL_HYPOTHESES, require_hypotheses
from gsp4_verify.models.config import CITATIONS
from gsp4_verify.models.results import VerificationReport
from gsp4_verify.utils.validators import validate_parity, validate_pq


def _rational(text: str, name: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        fail_input(f"{name} must be a rational number, got {text!r}")


@click.group()
def arch():
    """Archimedean local integrals."""


@arch.command("mellin-verify")
@click.option("--k", "k", type=int, required=True)
@click.option("--kp", "kp", type=int, required=True)
@output_options
@handles_input_errors
def mellin_verify_cmd(k, kp, output_format, output_file, config_file):
    """Mellin transform of the survivor's Meijer G against the gamma product."""
    config = project_config(config_file)
    digits = working_digits(config)
    require_hypotheses(k, kp, SURVIVAL_HYPOTHESES)
    report = mellin_verify(survivor_params(k, kp), k - 1, kp - 1, digits)
    emit([report], output_format, output_file, config, digits)


@arch.command("tate-verify")
@click.option("--p", "p", type=int, required=True)
@click.option("--q", "q", type=int, required=True)
@click.option("--r", "r", type=int, required=True, help="Basis index, r = p (mod 2)")
@click.option("--s", "s", type=int, required=True, help="Basis index, s = q (mod 2)")
@output_options
@handles_input_errors
def tate_verify_cmd(p, q, r, s, output_format, output_file, config_file):
    """Archimedean Tate product: quadrature, moment form and quoted form."""
    config = project_config(config_file)
    digits = working_digits(config)
    for ok, reason in (validate_pq(p, q), validate_parity(p, q, r, s)):
        if not ok:
            fail_input(reason)
    emit([tate_arch_verify(p, q, r, s, digits)], output_format, output_file, config, digits)


@arch.command("meijer")
@click.option("--z", "z", type=str, required=True, help="Positive rational argument, e.g. 3/2")
@click.option("--k", "k", type=int, default=None, help="Use the survivor parameters of (k, k')")
@click.option("--kp", "kp", type=int, default=None)
@click.option("--lambda1", type=int, default=None)
@click.option("--lambda2", type=int, default=None)
@click.option("--t", "t", type=int, default=None)
@click.option("--p", "p", type=int, default=None)
@click.option("--q", "q", type=int, default=None)
@output_options
@handles_input_errors
def meijer_cmd(z, k, kp, lambda1, lambda2, t, p, q, output_format, output_file, config_file):
    """G^{4,0}_{2,4}(z) by contour quadrature, cross-checked when possible."""
    config = project_config(config_file)
    digits = working_digits(config)
    zval = _rational(z, "z")

    if k is not None and kp is not None:
        params = survivor_params(k, kp)
    elif None not in (lambda1, lambda2, t, p, q):
        params = meijer_params(lambda1, lambda2, t, p, q)
    else:
        fail_input("give --k/--kp or all of --lambda1 --lambda2 --t --p --q")

    result = meijer_g(zval, params, digits)
    report = VerificationReport("meijer", citations=[CITATIONS["meijer"]])
    report.add("a", params.a)
    report.add("c", params.c)
    report.add(f"G({zval})", result.value, result.estimated_error)
    report.add("mode", result.mode)
    report.add("relative imaginary part", None, result.imaginary)
    if result.cross_check_error is not None:
        report.add("residue series agreement", None, result.cross_check_error)
    emit([report], output_format, output_file, config, digits)


@arch.command("bessel-radial")
@click.option("--x", "x", type=str, required=True, help="Positive rational, e.g. 1/2")
@click.option("--k", "k", type=int, required=True)
@click.option("--kp", "kp", type=int, required=True)
@output_options
@handles_input_errors
def bessel_radial_cmd(x, k, kp, output_format, output_file, config_file):
    """x^((p+q)/2) G((pi x)^2) / G(pi^2) for the survivor parameters."""
    config = project_config(config_file)
    digits = working_digits(config)
    xval = _rational(x, "x")
    lambda1, lambda2, t, p, q = survivor_weights(k, kp)
    result = bessel_radial(xval, meijer_params(lambda1, lambda2, t, p, q), p, q, digits)
    report = VerificationReport("bessel-radial", citations=[CITATIONS["meijer"]])
    report.add(f"W(diag({xval}, {xval}, 1, 1))", result.value, result.estimated_error)
    emit([report], output_format, output_file, config, digits)


@arch.command("vanishing")
@click.option("--t", "t", type=int, required=True)
@click.option("--lambda1", type=int, required=True)
@click.option("--lambda2", type=int, required=True)
@click.option("--r", "r", type=int, required=True)
@click.option("--s", "s", type=int, required=True)
@output_options
@handles_input_errors
def vanishing_cmd(t, lambda1, lambda2, r, s, output_format, output_file, config_file):
    """Weight rule: the integral vanishes unless t+lambda2+r = 0 and -t+lambda1+s = 0."""
    config = project_config(config_file)
    report = VerificationReport("arch-vanishing", citations=[CITATIONS["survival"]])
    report.add("t + lambda2 + r", t + lambda2 + r)
    report.add("-t + lambda1 + s", -t + lambda1 + s)
    report.add("vanishes", arch_vanishing(t, lambda1, lambda2, r, s))
    emit([report], output_format, output_file, config, working_digits(config))


@arch.command("gamma")
@output_options
@handles_input_errors
def gamma_cmd(output_format, output_file, config_file):
    """mpmath gamma against exact values on 1/2, 1, ..., 30."""
    config = project_config(config_file)
    digits = working_digits(config)
    emit([verify_gamma(digits=digits)], output_format, output_file, config, digits)


@arch.command("pi-class")
@click.argument("values", nargs=-1, required=True)
@output_options
@handles_input_errors
def pi_class_cmd(values, output_format, output_file, config_file):
    """Power of pi in Gamma(x) for positive integers and half-integers."""
    config = project_config(config_file)
    report = VerificationReport("pi-class", citations=[CITATIONS["gamma"]])
    for raw in values:
        cls = pi_power_class(_rational(raw, "x"))
        report.add(f"Gamma({cls.argument})", f"pi^{cls.pi_exponent}")
    emit([report], output_format, output_file, config, working_digits(config))
