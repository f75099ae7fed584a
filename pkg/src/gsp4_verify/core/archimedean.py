"""
Archimedean local theory.

Meijer G^{4,0}_{2,4} parameters of the Bessel function attached to a
large discrete series, the weight rule that kills the local zeta
integral, a contour evaluation of G, the Mellin identity behind the
value W(1), the archimedean Tate integral and the exact pi-power
classification of gamma values.

Numerics run under ``mpmath.workdps``; exact inputs stay ``Fraction``.
"""

import logging
import math
import random
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

import mpmath
from mpmath.calculus.quadrature import GaussLegendre

from gsp4_verify.core.errors import ConstructionError, InputError, PrecisionError, UnsupportedArgumentError
from gsp4_verify.models.config import (
    CITATIONS,
    CONVERGENCE_TOLERANCE,
    DEFAULT_PRECISION_DIGITS,
    DUAL_METHOD_TOLERANCE,
    GAMMA_TOLERANCE,
    GUARD_DIGITS,
    MEIJER_RANDOM_SETS,
    REALITY_TOLERANCE,
    REPORT_TOLERANCE,
)
from gsp4_verify.models.results import MeijerParams, NumericResult, PiPowerClass, VerificationReport

logger = logging.getLogger(__name__)

# Larghezza dei pannelli Gauss-Legendre lungo la retta verticale
CONTOUR_PANEL = Fraction(1, 2)
CONTOUR_DEGREE = 4
# Pannelli in x per l'integrale di Mellin
MELLIN_PANEL = Fraction(1, 2)
MELLIN_DEGREE = 3
MAX_CONTOUR_HEIGHT = 4000
# Distanze candidate fra la retta e min(c); la prima che evita gli zeri di 1/Gamma(a_j - s)
CONTOUR_OFFSETS = (Fraction(1, 2), Fraction(3, 8), Fraction(5, 8), Fraction(1, 3))
# Punti tau = 0, 1/2, ..., 4 per la scala di riferimento del nucleo
REFERENCE_POINTS = 9


# ─── Parameters and vanishing rule ───────────────────────────────────────────


def meijer_params(lambda1: int, lambda2: int, t: int, p: int, q: int) -> MeijerParams:
    """Six exact parameters of the Bessel function on diag(y, y, 1, 1)."""
    shift = Fraction(q - p, 2)
    lambda1, lambda2, t = Fraction(lambda1), Fraction(lambda2), Fraction(t)
    return MeijerParams(
        a1=(t - lambda2 - shift + 2) / 2,
        a2=(2 * lambda1 + lambda2 - t + shift + 2) / 2,
        c1=(lambda1 + lambda2 + 4) / 4,
        c2=(lambda1 - lambda2 + 4) / 4,
        c3=(lambda1 + lambda2 + 2) / 4,
        c4=(lambda1 - lambda2 + 2) / 4,
    )


def arch_vanishing(t: int, lambda1: int, lambda2: int, r: int, s: int) -> bool:
    """True when the archimedean integral against the (r, s) vector is zero."""
    return t + lambda2 + r != 0 or -t + lambda1 + s != 0


def survivor_weights(k: int, kp: int) -> Tuple[int, int, int, int, int]:
    """(lambda1, lambda2, t, p, q) for the generic member paired with the surviving term."""
    p, q = k - 1, kp - 1
    return k + 3, -kp - 1, kp + p + 3, p, q


def survivor_params(k: int, kp: int) -> MeijerParams:
    return meijer_params(*survivor_weights(k, kp))


def mellin_exponent(p: int, q: int) -> Fraction:
    """a = (3(p+q)+6)/2; the gamma arguments are shifted by a/2."""
    return Fraction(3 * (p + q) + 6, 2)


def has_integer_differences(params: MeijerParams) -> bool:
    cs = params.c
    return any((ci - cj).denominator == 1 for i, ci in enumerate(cs) for cj in cs[i + 1 :])


# ─── Contour evaluation ──────────────────────────────────────────────────────


def _mp(value):
    if isinstance(value, Fraction):
        return mpmath.mpf(value.numerator) / value.denominator
    return mpmath.mpf(value)


def _kernel(cs: Sequence, as_: Sequence, s):
    """Gamma ratio prod Gamma(c_j - s) / prod Gamma(a_j - s)."""
    value = mpmath.mpf(1)
    for c in cs:
        value *= mpmath.gamma(c - s)
    for a in as_:
        value *= mpmath.rgamma(a - s)
    return value


def contour_abscissa(params: MeijerParams) -> Fraction:
    """Re s of the integration line: left of every c_j, off every zero of the kernel.

    The kernel vanishes at s = a_j + n (n >= 0).
    """
    low = min(params.c)
    for offset in CONTOUR_OFFSETS:
        sigma0 = low - offset
        if not any((a - sigma0).denominator == 1 and a - sigma0 <= 0 for a in params.a):
            return sigma0
    raise ConstructionError(f"no contour abscissa avoids the kernel zeros for a = {params.a}")


def _reference_size(cs: Sequence, as_: Sequence, sigma0):
    """Largest |Phi| over the first few points of the line."""
    return max(abs(_kernel(cs, as_, mpmath.mpc(sigma0, mpmath.mpf(j) / 2))) for j in range(REFERENCE_POINTS))


class _Contour:
    """Gauss-Legendre nodes on the line Re s = sigma0, weighted by the gamma kernel.

    Must be built inside the caller's ``workdps`` block. The kernel is
    conjugate-symmetric for real parameters, so G(y) only needs the
    upper half line.
    """

    def __init__(self, params: MeijerParams, degree: int = CONTOUR_DEGREE):
        self.cs = [_mp(c) for c in params.c]
        self.as_ = [_mp(a) for a in params.a]
        self.sigma0 = _mp(contour_abscissa(params))
        self.degree = degree
        self.height = self._truncation_height()

        width = _mp(CONTOUR_PANEL)
        rule = GaussLegendre(mpmath.mp).calc_nodes(degree, mpmath.mp.prec)
        panels = int(mpmath.ceil(self.height / width))
        self.nodes: List[Tuple[object, object]] = []
        self.weights: List[object] = []
        for j in range(panels):
            left = j * width
            for x, w in rule:
                tau = left + (x + 1) * width / 2
                node_weight = w * width / 2
                self.nodes.append((tau, node_weight))
                self.weights.append(node_weight * _kernel(self.cs, self.as_, mpmath.mpc(self.sigma0, tau)))
        self.scale = mpmath.fsum(abs(w) for w in self.weights)
        # coda oltre l'altezza di troncamento
        self.tail = abs(_kernel(self.cs, self.as_, mpmath.mpc(self.sigma0, self.height))) * 2 / mpmath.pi
        logger.debug("contour: sigma0=%s height=%s nodes=%d", self.sigma0, self.height, len(self.nodes))

    def _truncation_height(self):
        start = _reference_size(self.cs, self.as_, self.sigma0)
        threshold = start * mpmath.mpf(10) ** (-mpmath.mp.dps)
        height = mpmath.mpf(4)
        while abs(_kernel(self.cs, self.as_, mpmath.mpc(self.sigma0, height))) > threshold:
            height += 2
            if height > MAX_CONTOUR_HEIGHT:
                raise PrecisionError(f"contour truncation did not converge below height {MAX_CONTOUR_HEIGHT}")
        return height

    def evaluate(self, y):
        """G(y) = (1/pi) Re sum_i w_i Phi(s_i) y^(s_i)."""
        log_y = mpmath.log(y)
        total = mpmath.mpf(0)
        for (tau, _), weight in zip(self.nodes, self.weights):
            cos, sin = mpmath.cos_sin(tau * log_y)
            total += weight.real * cos - weight.imag * sin
        return mpmath.exp(self.sigma0 * log_y) * total / mpmath.pi

    def full_line(self, y):
        """Both half lines summed as complex numbers, the lower one evaluated independently."""
        log_y = mpmath.log(y)
        total = mpmath.mpc(0)
        for (tau, node_weight), weight in zip(self.nodes, self.weights):
            upper = mpmath.mpc(self.sigma0, tau)
            lower = mpmath.mpc(self.sigma0, -tau)
            total += weight * mpmath.exp(upper * log_y)
            total += node_weight * _kernel(self.cs, self.as_, lower) * mpmath.exp(lower * log_y)
        return total / (2 * mpmath.pi)

    def error_bound(self, y):
        """Truncation tail plus accumulated rounding, both scaled by y^sigma0."""
        size = mpmath.exp(self.sigma0 * mpmath.log(y))
        return size * (self.tail + self.scale * mpmath.mpf(10) ** (-mpmath.mp.dps)) / mpmath.pi


def meijer_g_residue(z, params: MeijerParams, digits: int = DEFAULT_PRECISION_DIGITS):
    """Residue-series route through ``mpmath.meijerg``; needs pairwise non-integral c differences."""
    if has_integer_differences(params):
        raise UnsupportedArgumentError(f"c parameters {params.c} differ by an integer: residue series degenerates")
    with mpmath.workdps(digits + GUARD_DIGITS):
        cs = [_mp(c) for c in params.c]
        as_ = [_mp(a) for a in params.a]
        return +mpmath.meijerg([[], as_], [cs, []], _mp(z))


def meijer_g(
    z, params: MeijerParams, digits: int = DEFAULT_PRECISION_DIGITS, cross_check: bool = True
) -> NumericResult:
    """G^{4,0}_{2,4}(z) along a vertical contour left of every pole of Gamma(c_j - s).

    The error estimate combines the gap to a coarser Gauss-Legendre rule,
    the truncation tail and rounding. When the c parameters allow it the
    value is compared with the residue series; otherwise the result is
    flagged ``contour-only``.
    """
    if z <= 0:
        raise InputError(f"z > 0 fails: z = {z}")

    with mpmath.workdps(digits + GUARD_DIGITS):
        y = _mp(z)
        contour = _Contour(params)
        value = contour.evaluate(y)
        coarse = _Contour(params, degree=CONTOUR_DEGREE - 1).evaluate(y)
        error = abs(value - coarse) + contour.error_bound(y)
        full = contour.full_line(y)

        if value == 0 or error > abs(value) * mpmath.mpf(10) ** (-(digits // 2)):
            raise PrecisionError(f"contour quadrature did not converge at z = {z}: error {mpmath.nstr(error, 5)}")

        result = NumericResult(
            value=value,
            estimated_error=float(error),
            digits=digits,
            imaginary=float(abs(full.imag) / abs(value)),
        )

        if not cross_check:
            return result
        if has_integer_differences(params):
            logger.warning("pole collision in %s: residue cross-check disabled", params.c)
            result.mode = "contour-only"
            return result

        residue = meijer_g_residue(z, params, digits)
        result.mode = "contour+residue"
        result.cross_check_error = float(abs(residue - value) / abs(value))
        return result


def _random_params(rng: random.Random) -> MeijerParams:
    while True:
        cs = [Fraction(rng.randint(3, 40), 13) for _ in range(4)]
        as_ = [Fraction(rng.randint(3, 60), 11) for _ in range(2)]
        params = MeijerParams(as_[0], as_[1], *cs)
        if not has_integer_differences(params):
            return params


def verify_meijer_dual(
    sets: int = MEIJER_RANDOM_SETS, seed: Optional[int] = None, digits: int = DEFAULT_PRECISION_DIGITS
) -> VerificationReport:
    """Contour against residue series on random non-degenerate parameter sets."""
    seed = seed if seed is not None else random.randrange(2**31)
    rng = random.Random(seed)
    report = VerificationReport("meijer-dual", citations=[CITATIONS["meijer"]], seed=seed)

    for _ in range(sets):
        params = _random_params(rng)
        z = Fraction(rng.randint(5, 30), 10)
        result = meijer_g(z, params, digits)
        label = f"G(z={z}; a={tuple(map(str, params.a))}; c={tuple(map(str, params.c))})"
        if result.cross_check_error is None or result.cross_check_error > DUAL_METHOD_TOLERANCE:
            report.fail(f"{label}: contour and residue routes disagree", mpmath.nstr(result.value, 15), result.cross_check_error)
        elif result.imaginary > REALITY_TOLERANCE:
            report.fail(f"{label}: imaginary part too large", mpmath.nstr(result.value, 15), result.imaginary)
        else:
            report.add(label, mpmath.nstr(result.value, 15), result.cross_check_error)
    return report


# ─── Mellin identity ─────────────────────────────────────────────────────────


def mellin_closed_form(params: MeijerParams, exponent: Fraction):
    """(1/2) pi^(-a) prod Gamma(c_j + a/2) / prod Gamma(a_j + a/2)."""
    sigma = _mp(exponent) / 2
    value = mpmath.pi ** (-_mp(exponent)) / 2
    for c in params.c:
        value *= mpmath.gamma(_mp(c) + sigma)
    for a in params.a:
        value *= mpmath.rgamma(_mp(a) + sigma)
    return value


def _mellin_cutoff(params: MeijerParams, exponent: Fraction, dps: int) -> float:
    """First x past the peak where x^(a-1) G((pi x)^2) has dropped by 10^-dps."""
    theta = (float(sum(params.c)) - float(sum(params.a)) - 0.5) / 2
    power = float(exponent) - 1

    def log_size(x: float) -> float:
        return power * math.log(x) + 2 * theta * math.log(math.pi * x) - 2 * math.pi * x

    x, peak = 0.5, -math.inf
    while True:
        size = log_size(x)
        peak = max(peak, size)
        if size < peak - dps * math.log(10) - 5:
            return x
        x += float(MELLIN_PANEL)


def _mellin_quadrature(contour: _Contour, exponent: Fraction, x_max: float, degree: int):
    rule = GaussLegendre(mpmath.mp).calc_nodes(degree, mpmath.mp.prec)
    a = _mp(exponent)
    breaks = [mpmath.mpf(0), mpmath.mpf(1) / 8, mpmath.mpf(1) / 4]
    x = _mp(MELLIN_PANEL)
    while x <= x_max:
        breaks.append(x)
        x += _mp(MELLIN_PANEL)

    total = mpmath.mpf(0)
    for left, right in zip(breaks, breaks[1:]):
        half = (right - left) / 2
        for node, weight in rule:
            xv = left + (node + 1) * half
            total += weight * half * xv ** (a - 1) * contour.evaluate((mpmath.pi * xv) ** 2)
    return total


def mellin_verify(
    params: MeijerParams, p: int, q: int, digits: int = DEFAULT_PRECISION_DIGITS
) -> VerificationReport:
    """Numerical Mellin transform of G((pi x)^2) against the gamma-product closed form."""
    exponent = mellin_exponent(p, q)
    sigma = exponent / 2
    if any(c + sigma <= 0 for c in params.c):
        raise InputError(f"c_j + {sigma} > 0 fails for c = {params.c}: Mellin integral diverges at 0")

    report = VerificationReport("mellin", citations=[CITATIONS["mellin"], CITATIONS["meijer"]])
    report.add("exponent a = (3(p+q)+6)/2", exponent)

    dps = digits + GUARD_DIGITS
    x_max = _mellin_cutoff(params, exponent, dps)
    with mpmath.workdps(dps):
        closed = mellin_closed_form(params, exponent)
        sigma0 = _mp(contour_abscissa(params))
        kernel = _reference_size([_mp(c) for c in params.c], [_mp(a) for a in params.a], sigma0)
        y_max = (mpmath.pi * x_max) ** 2
        size = kernel * _mp(x_max) ** (_mp(exponent) - 1) * y_max ** max(sigma0, 0) / abs(closed)
        extra = max(0, int(mpmath.ceil(mpmath.log10(size))) + 2)

    logger.debug("mellin p=%d q=%d x_max=%s extra digits=%d", p, q, x_max, extra)
    with mpmath.workdps(dps + extra):
        contour = _Contour(params)
        numeric = _mellin_quadrature(contour, exponent, x_max, MELLIN_DEGREE)
        refined = _mellin_quadrature(contour, exponent, x_max, MELLIN_DEGREE + 1)
        closed = mellin_closed_form(params, exponent)
        deviation = float(abs(numeric - closed) / abs(closed))
        convergence = float(abs(refined - numeric) / abs(numeric))
        report.add("closed form", mpmath.nstr(closed, 20))
        report.add("quadrature", mpmath.nstr(numeric, 20), deviation)

    if convergence > CONVERGENCE_TOLERANCE:
        report.fail("doubling the x-quadrature depth moved the integral", mpmath.nstr(refined, 20), convergence)
    else:
        report.add("depth-doubling change", None, convergence)
    if deviation > REPORT_TOLERANCE:
        report.fail("quadrature differs from closed form", mpmath.nstr(numeric, 20), deviation)
    return report


def mellin_grid(max_sum: int) -> List[Tuple[int, int]]:
    """Pairs k > k' > 0 with k odd, k' even and k + k' <= max_sum, sorted."""
    return [(k, kp) for k in range(3, max_sum, 2) for kp in range(2, k, 2) if k + kp <= max_sum]


def bessel_radial(x, params: MeijerParams, p: int, q: int, digits: int = DEFAULT_PRECISION_DIGITS) -> NumericResult:
    """x^((p+q)/2) G((pi x)^2) / G(pi^2): the Bessel function on diag(x, x, 1, 1) with W(1) = 1."""
    if x <= 0:
        raise InputError(f"x > 0 fails: x = {x}")
    with mpmath.workdps(digits + GUARD_DIGITS):
        xv = _mp(x)
        at_x = meijer_g((mpmath.pi * xv) ** 2, params, digits, cross_check=False)
        at_one = meijer_g(mpmath.pi**2, params, digits, cross_check=False)
        value = xv ** (mpmath.mpf(p + q) / 2) * at_x.value / at_one.value
        relative = at_x.estimated_error / abs(float(at_x.value)) + at_one.estimated_error / abs(float(at_one.value))
        return NumericResult(value=value, estimated_error=float(abs(value)) * relative, digits=digits)


# ─── Tate integral ───────────────────────────────────────────────────────────


def _parity_sign(exponent: int) -> int:
    return 1 if exponent % 2 == 0 else -1


def _tate_factor(p: int, q: int, r: int):
    """One archimedean Tate integral at s = p+q+3/2 for the character |t|^-q sgn(t)^p."""
    sign = _parity_sign((p + r) // 2)
    point = mpmath.mpf(p + q) + mpmath.mpf(3) / 2

    def integrand(t):
        if t == 0:
            return mpmath.mpf(0)
        # Phi(0, t) = (-1)^((p+r)/2) t^p e^{-pi t^2}
        test = sign * t**p * mpmath.exp(-mpmath.pi * t**2)
        character = abs(t) ** (-q) * mpmath.sign(t) ** p
        return test * abs(t) ** (point + mpmath.mpf(1) / 2) * character / abs(t)

    return mpmath.quad(integrand, [-mpmath.inf, 0, mpmath.inf], error=True)


def tate_arch_verify(p: int, q: int, r: int, s: int, digits: int = DEFAULT_PRECISION_DIGITS) -> VerificationReport:
    """Product of the two archimedean Tate integrals against the quoted closed form."""
    if p < 0 or q < 0:
        raise InputError(f"p, q >= 0 fails: (p, q) = {(p, q)}")
    if (r - p) % 2 or (s - q) % 2:
        raise InputError(f"r = p and s = q (mod 2) fails for (p, q, r, s) = {(p, q, r, s)}")

    report = VerificationReport("tate-arch", citations=[CITATIONS["tate-arch"]])
    # Gamma(p+q) ha un polo in p = q = 0
    quoted_defined = p + q > 0
    sign = _parity_sign((p + q + r + s) // 2)
    with mpmath.workdps(digits + GUARD_DIGITS):
        gaussian = mpmath.quad(lambda y: mpmath.exp(-mpmath.pi * y**2), [-mpmath.inf, mpmath.inf])
        first, first_err = _tate_factor(p, q, r)
        second, second_err = _tate_factor(q, p, s)
        product = first * second
        moment = sign * mpmath.factorial(p) * mpmath.factorial(q) * mpmath.pi ** (-(p + q + 2))
        moment_gap = float(abs(product - moment) / abs(moment))
        if quoted_defined:
            quoted = sign * mpmath.pi ** (-2 * (p + q)) * mpmath.gamma(p + q) ** 2
            quoted_gap = float(abs(product - quoted) / abs(quoted))
        error = float(abs(first_err * second) + abs(second_err * first))

        report.add("Z_1", mpmath.nstr(first, 20), float(first_err))
        report.add("Z_2", mpmath.nstr(second, 20), float(second_err))
        report.add("quadrature product", mpmath.nstr(product, 20), error)
        report.add("Gaussian moment form (-1)^((p+q+r+s)/2) p! q! pi^-(p+q+2)", mpmath.nstr(moment, 20), moment_gap)
        if quoted_defined:
            report.add("quoted form (-1)^((p+q+r+s)/2) pi^-2(p+q) Gamma(p+q)^2", mpmath.nstr(quoted, 20), quoted_gap)
        else:
            report.add("quoted form (-1)^((p+q+r+s)/2) pi^-2(p+q) Gamma(p+q)^2", "undefined: Gamma pole at p + q = 0")
        gaussian_gap = float(abs(gaussian - 1))

    if gaussian_gap > REPORT_TOLERANCE:
        report.fail("Gaussian normalization integral is not 1", None, gaussian_gap)
    else:
        report.add("Gaussian normalization", 1, gaussian_gap)
    if moment_gap > REPORT_TOLERANCE:
        report.fail("quadrature disagrees with its own moment form", None, moment_gap)
    if quoted_defined and quoted_gap > REPORT_TOLERANCE:
        report.fail("quadrature product differs from the quoted form", None, quoted_gap)
    return report


# ─── Gamma values and pi classes ─────────────────────────────────────────────


def gamma_exact(x) -> Tuple[Fraction, Fraction]:
    """Gamma(x) = rational * pi^e for positive integers and half-integers."""
    x = Fraction(x)
    pi_power_class(x)
    if x.denominator == 1:
        return Fraction(math.factorial(x.numerator - 1)), Fraction(0)
    m = (x.numerator - 1) // 2
    return Fraction(math.factorial(2 * m), 4**m * math.factorial(m)), Fraction(1, 2)


def pi_power_class(x) -> PiPowerClass:
    x = Fraction(x)
    if x <= 0:
        raise InputError(f"x > 0 fails: x = {x}")
    if x.denominator == 1:
        return PiPowerClass(Fraction(0), x)
    if x.denominator == 2:
        return PiPowerClass(Fraction(1, 2), x)
    raise UnsupportedArgumentError(f"only integers and half-integers are classified, got {x}")


def verify_gamma(max_x: int = 30, digits: int = DEFAULT_PRECISION_DIGITS) -> VerificationReport:
    """mpmath.gamma against exact factorial and sqrt(pi) values on 1/2, 1, ..., max_x."""
    report = VerificationReport("gamma", citations=[CITATIONS["gamma"]])
    with mpmath.workdps(digits + GUARD_DIGITS):
        for n in range(1, 2 * max_x + 1):
            x = Fraction(n, 2)
            rational, pi_exp = gamma_exact(x)
            oracle = _mp(rational) * mpmath.pi ** _mp(pi_exp)
            gap = float(abs(mpmath.gamma(_mp(x)) - oracle) / oracle)
            if gap > GAMMA_TOLERANCE:
                report.fail(f"Gamma({x})", mpmath.nstr(oracle, 20), gap)
    if report.passed:
        report.add(f"{2 * max_x} points within {GAMMA_TOLERANCE}")
    return report
