"""
Power of pi in the comparison between the regulator pairing and the
L-value: assemble, keep the surviving term, classify the six gamma
arguments of its Mellin value and add the Betti period denominator.
"""

import logging
from fractions import Fraction
from typing import List

from gsp4_verify.core.archimedean import mellin_exponent, pi_power_class, survivor_params
from gsp4_verify.core.errors import ConstructionError
from gsp4_verify.core.pairing import require_hypotheses, survival
from gsp4_verify.models.config import CITATIONS, PERIOD_PI_EXPONENT, QUOTED_PI_EXPONENT
from gsp4_verify.models.results import GammaClass, MeijerParams, TraceResult, VerificationReport

logger = logging.getLogger(__name__)


def gamma_classes(params: MeijerParams, p: int, q: int) -> List[GammaClass]:
    """Gamma(c_j + a/2) upstairs, Gamma(a_j + a/2) downstairs."""
    shift = mellin_exponent(p, q) / 2
    classes = []
    for name, value in zip(("c1", "c2", "c3", "c4"), params.c):
        arg = value + shift
        classes.append(GammaClass(name, arg, pi_power_class(arg).pi_exponent, in_numerator=True))
    for name, value in zip(("a1", "a2"), params.a):
        arg = value + shift
        classes.append(GammaClass(name, arg, pi_power_class(arg).pi_exponent, in_numerator=False))
    return classes


def _net(classes: List[GammaClass]) -> Fraction:
    return sum((g.pi_exponent if g.in_numerator else -g.pi_exponent for g in classes), Fraction(0))


def run_trace(k: int, kp: int) -> TraceResult:
    require_hypotheses(k, kp)
    p, q = k - 1, kp - 1

    survivors = survival(k, kp).survivors
    if len(survivors) != 1:
        raise ConstructionError(f"expected a single surviving term for ({k}, {kp}), got {survivors}")

    classes = gamma_classes(survivor_params(k, kp), p, q)
    gamma_exp = _net(classes)
    result = TraceResult(
        k=k,
        kp=kp,
        surviving_term=survivors[0],
        gamma_classes=classes,
        gamma_pi_exponent=gamma_exp,
        pi_exponent=PERIOD_PI_EXPONENT + gamma_exp,
        quoted_pi_exponent=QUOTED_PI_EXPONENT,
    )
    logger.info("trace (%d, %d): gamma %s, net %s", k, kp, gamma_exp, result.pi_exponent)
    return result


def trace_pi_exponent(k: int, kp: int) -> Fraction:
    return run_trace(k, kp).pi_exponent


def trace_report(k: int, kp: int) -> VerificationReport:
    report = VerificationReport("trace", citations=[CITATIONS["trace"], CITATIONS["survival"], CITATIONS["gamma"]])
    result = run_trace(k, kp)
    report.add("surviving term", result.surviving_term)
    for g in result.gamma_classes:
        where = "numerator" if g.in_numerator else "denominator"
        report.add(f"Gamma({g.name} + a/2) = Gamma({g.argument}) in {where}", f"pi^{g.pi_exponent}")
    report.add("gamma contribution", result.gamma_pi_exponent)
    report.add("period (2 pi i)^2", PERIOD_PI_EXPONENT)
    if result.pi_exponent != result.quoted_pi_exponent:
        report.fail(
            f"net pi exponent {result.pi_exponent} differs from quoted {result.quoted_pi_exponent}",
            result.pi_exponent,
        )
    else:
        report.add("net pi exponent", result.pi_exponent)
    return report
