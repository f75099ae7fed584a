"""
Unramified local theory: Satake symbols b0, b1, b2, the Weyl action on
them, the antisymmetrizer, the spin L-factor, Bessel values and the
unramified Tate factor.

Everything is exact. Polynomials live over the variables (b0, b1, b2, T)
and the Weyl group acts on the first three exponents only.
"""

import logging
import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

from gsp4_verify.core.algebra import LaurentPoly, RationalFn, TruncSeries, rf_equal, series_of
from gsp4_verify.core.errors import ConstructionError, DegenerateParameterError, InputError
from gsp4_verify.core.roots import WeylElement, weyl_group
from gsp4_verify.models.config import CITATIONS, NUMERIC_SAMPLES, TATE_SERIES_DEPTH
from gsp4_verify.models.results import VerificationReport

logger = logging.getLogger(__name__)

SATAKE_VARS = ("b0", "b1", "b2", "T")

Matrix3 = Tuple[Tuple[int, int, int], Tuple[int, int, int], Tuple[int, int, int]]

# Azione sugli esponenti (e0, e1, e2) di b0^e0 b1^e1 b2^e2
_SATAKE_GENERATORS: Dict[str, Matrix3] = {
    # b0 -> b0 b2, b1 -> b1, b2 -> b2^-1
    "s1": ((1, 0, 0), (0, 1, 0), (1, 0, -1)),
    # b1 <-> b2
    "s2": ((1, 0, 0), (0, 0, 1), (0, 1, 0)),
}
_ID3: Matrix3 = ((1, 0, 0), (0, 1, 0), (0, 0, 1))

# alpha_1..alpha_4 = b0 b1 b2, b0 b1, b0, b0 b2
ALPHA_EXPONENTS: Dict[int, Tuple[int, int, int]] = {
    1: (1, 1, 1),
    2: (1, 1, 0),
    3: (1, 0, 0),
    4: (1, 0, 1),
}


def _mat3(a: Matrix3, b: Matrix3) -> Matrix3:
    return tuple(tuple(sum(a[i][k] * b[k][j] for k in range(3)) for j in range(3)) for i in range(3))


# ─── Gruppo di Weyl sui parametri di Satake ──────────────────────────────────


@dataclass(frozen=True)
class SatakeWeylElement:
    element: WeylElement
    matrix: Matrix3

    @property
    def sign(self) -> int:
        return self.element.sign

    def act_exponents(self, e: Sequence[int]) -> Tuple[int, ...]:
        head = tuple(sum(self.matrix[i][j] * e[j] for j in range(3)) for i in range(3))
        return head + tuple(e[3:])

    def __call__(self, f):
        return f.map_exponents(self.act_exponents)


def _word_matrix(word: Sequence[str]) -> Matrix3:
    # l'azione su funzioni compone da destra: (w1 w2) f = w1 (w2 f)
    m = _ID3
    for name in word:
        m = _mat3(m, _SATAKE_GENERATORS[name])
    return m


@lru_cache(maxsize=None)
def satake_weyl_group() -> Tuple[SatakeWeylElement, ...]:
    """The eight elements, indexed by the reduced words of the root-datum Weyl group."""
    elements = tuple(SatakeWeylElement(w, _word_matrix(w.word)) for w in weyl_group())
    if len({e.matrix for e in elements}) != 8:
        raise ConstructionError("Satake action of the Weyl group is not faithful")
    return elements


def satake_action_consistent() -> bool:
    """All 64 products agree with word reduction in the root-datum group."""
    group = satake_weyl_group()
    by_element = {e.element: e for e in group}
    for x in group:
        for y in group:
            product = by_element[x.element * y.element]
            if _mat3(x.matrix, y.matrix) != product.matrix:
                return False
    return True


# ─── Simboli e antisimmetrizzatore ───────────────────────────────────────────


def satake_monomial(e0: int, e1: int, e2: int, t: int = 0, coeff=1) -> LaurentPoly:
    return LaurentPoly.monomial(SATAKE_VARS, (e0, e1, e2, t), coeff)


def alpha(i: int) -> LaurentPoly:
    if i not in ALPHA_EXPONENTS:
        raise InputError(f"alpha index must be 1..4, got {i}")
    return satake_monomial(*ALPHA_EXPONENTS[i])


def alpha_word(powers: Dict[int, int]) -> LaurentPoly:
    """prod alpha_i^powers[i]."""
    out = LaurentPoly.one(SATAKE_VARS)
    for i, n in powers.items():
        out = out * alpha(i) ** n
    return out


@dataclass(frozen=True)
class SatakeSymbols:
    """Exact instantiation of (b0, b1, b2); None means the free symbol."""

    b0: Optional[Fraction] = None
    b1: Optional[Fraction] = None
    b2: Optional[Fraction] = None

    @property
    def is_symbolic(self) -> bool:
        return self.b0 is None and self.b1 is None and self.b2 is None

    def values(self) -> Dict[str, Fraction]:
        if any(v is None for v in (self.b0, self.b1, self.b2)):
            raise InputError("partially instantiated Satake symbols")
        return {"b0": self.b0, "b1": self.b1, "b2": self.b2}

    def alphas(self) -> List:
        if self.is_symbolic:
            return [alpha(i) for i in range(1, 5)]
        vals = self.values()
        return [alpha(i).evaluate({**vals, "T": 0}) for i in range(1, 5)]

    def betas_product(self):
        """beta1 beta2 = alpha1 alpha3, read-only through the central character."""
        a = self.alphas()
        return a[0] * a[2]


def alpha_relation_holds() -> bool:
    """alpha1 alpha3 = alpha2 alpha4, preserved by every Weyl element."""
    lhs, rhs = alpha(1) * alpha(3), alpha(2) * alpha(4)
    if lhs != rhs:
        return False
    return all(w(lhs) == w(rhs) for w in satake_weyl_group())


def antisymmetrize(f: LaurentPoly) -> LaurentPoly:
    """sum_w (-1)^l(w) w f."""
    if f.variables != SATAKE_VARS:
        f = f.with_variables(SATAKE_VARS)
    total = LaurentPoly.zero(SATAKE_VARS)
    for w in satake_weyl_group():
        image = w(f)
        total = total + image if w.sign > 0 else total - image
    return total


# ─── Fattore L spinoriale e valori di Bessel ─────────────────────────────────


def spin_denominator(sp: SatakeSymbols = SatakeSymbols()) -> LaurentPoly:
    t = LaurentPoly.variable(SATAKE_VARS, "T")
    den = LaurentPoly.one(SATAKE_VARS)
    for a in sp.alphas():
        a_poly = a if isinstance(a, LaurentPoly) else LaurentPoly.constant(SATAKE_VARS, a)
        den = den * (1 - a_poly * t)
    return den


def spin_lfactor(sp: SatakeSymbols = SatakeSymbols()) -> RationalFn:
    """1 / prod (1 - alpha_i T)."""
    return RationalFn(LaurentPoly.one(SATAKE_VARS), spin_denominator(sp))


def spin_lfactor_weyl_invariant() -> bool:
    den = spin_denominator()
    return all(w(den) == den for w in satake_weyl_group())


BESSEL_BASE = {3: 2, 4: -1}


@lru_cache(maxsize=64)
def _bessel_denominator() -> LaurentPoly:
    return antisymmetrize(alpha_word(BESSEL_BASE))


@lru_cache(maxsize=64)
def bessel_value(m: int) -> RationalFn:
    """A(alpha3^(m+2) alpha4^-1) / A(alpha3^2 alpha4^-1); the factor p^(-3m/2) is kept apart."""
    if m < 0:
        raise InputError(f"m must be non-negative, got {m}")
    num = antisymmetrize(alpha_word({3: m + 2, 4: -1}))
    den = _bessel_denominator()
    if den.is_zero():
        raise ConstructionError("A(alpha3^2 alpha4^-1) vanishes identically")
    return RationalFn(num, den).simplified()


def bessel_value_at(m: int, sp: SatakeSymbols) -> Fraction:
    """Numeric c_m; a vanishing denominator raises DegenerateParameterError."""
    values = {**sp.values(), "T": 0}
    den = _bessel_denominator().evaluate(values)
    if not den:
        raise DegenerateParameterError(f"A(alpha3^2 alpha4^-1) vanishes at {sp}")
    num = antisymmetrize(alpha_word({3: m + 2, 4: -1})).evaluate(values)
    return (num / den).to_fraction()


@dataclass
class BesselSeries:
    """W_m = p^(-3m/2) c_m for m = 0..order."""

    order: int
    coefficients: List[RationalFn] = field(default_factory=list)

    def p_exponent(self, m: int) -> Fraction:
        return Fraction(-3 * m, 2)


def bessel_series(order: int) -> BesselSeries:
    if order < 0:
        raise InputError(f"order must be non-negative, got {order}")
    return BesselSeries(order, [bessel_value(m) for m in range(order + 1)])


def bessel_support(m: int) -> Optional[Fraction]:
    """None where the Bessel function vanishes (m < 0), else the p-power exponent -3m/2."""
    if m < 0:
        return None
    return Fraction(-3 * m, 2)


def complete_homogeneous(values: Sequence[Fraction], order: int) -> List[Fraction]:
    """h_0..h_order of the given numbers, from prod 1/(1 - a T)."""
    coeffs = [Fraction(1)] + [Fraction(0)] * order
    for a in values:
        for n in range(1, order + 1):
            coeffs[n] += a * coeffs[n - 1]
    return coeffs


# ─── Verifica dell'identità non ramificata ───────────────────────────────────

STATED_VANISHINGS: Tuple[Tuple[str, Tuple[Dict[int, int], ...]], ...] = (
    ("A(alpha2 alpha3)", ({2: 1, 3: 1},)),
    ("A(alpha2 alpha3^2 alpha4^-1)", ({2: 1, 3: 2, 4: -1},)),
    ("A(alpha3^2)", ({3: 2},)),
    ("A(alpha3^2 alpha1)", ({3: 2, 1: 1},)),
    ("A(alpha1 alpha2 alpha3^2)", ({1: 1, 2: 1, 3: 2},)),
    ("A(alpha2 alpha3^2 + alpha2^2 alpha3)", ({2: 1, 3: 2}, {2: 2, 3: 1})),
)


def stated_vanishings() -> List[Tuple[str, bool]]:
    out = []
    for label, words in STATED_VANISHINGS:
        poly = LaurentPoly.zero(SATAKE_VARS)
        for powers in words:
            poly = poly + alpha_word(powers)
        out.append((label, antisymmetrize(poly).is_zero()))
    return out


def intermediate_identity_holds() -> bool:
    """A(alpha3^2 alpha4^-1 (1 - alpha1 T)(1 - alpha2 T)(1 - alpha4 T)) = A(alpha3^2 alpha4^-1)."""
    t = LaurentPoly.variable(SATAKE_VARS, "T")
    base = alpha_word(BESSEL_BASE)
    lhs = base * (1 - alpha(1) * t) * (1 - alpha(2) * t) * (1 - alpha(4) * t)
    return antisymmetrize(lhs) == antisymmetrize(base)


def _random_symbols(rng: random.Random) -> SatakeSymbols:
    def draw() -> Fraction:
        num = 0
        while num == 0:
            num = rng.randint(-9, 9)
        return Fraction(num, rng.randint(1, 9))

    return SatakeSymbols(draw(), draw(), draw())


def verify_unramified(
    order: int, numeric: bool = False, seed: Optional[int] = None, samples: int = NUMERIC_SAMPLES
) -> VerificationReport:
    """Bessel series against the expansion of the spin L-factor, plus the stated A-identities."""
    if order < 1:
        raise InputError(f"order must be at least 1, got {order}")
    if numeric and seed is None:
        seed = random.randrange(2**31)
    report = VerificationReport(
        "unramified-identity",
        citations=[CITATIONS["unramified"], CITATIONS["antisymmetrizer"]],
        seed=seed if numeric else None,
    )

    if numeric:
        rng = random.Random(seed)
        accepted = rejected = 0
        while accepted < samples:
            sp = _random_symbols(rng)
            try:
                lhs = [bessel_value_at(m, sp) for m in range(order + 1)]
            except DegenerateParameterError:
                rejected += 1
                continue
            alphas = [a.to_fraction() for a in sp.alphas()]
            rhs = complete_homogeneous(alphas, order)
            diff = next((m for m in range(order + 1) if lhs[m] != rhs[m]), None)
            if diff is not None:
                report.fail(f"coefficient T^{diff} differs at b = ({sp.b0}, {sp.b1}, {sp.b2})", (lhs[diff], rhs[diff]))
                return report
            accepted += 1
        report.add("random rational points checked", accepted)
        report.add("degenerate points rejected", rejected)
    else:
        closed = series_of(spin_lfactor(), order, "T")
        lhs = TruncSeries("T", order, [bessel_value(m) for m in range(order + 1)], SATAKE_VARS)
        diff = lhs.first_difference(closed)
        if diff is not None:
            report.fail(f"first differing coefficient T^{diff}", (lhs.coefficient(diff), closed.coefficient(diff)))
        else:
            report.add("sum c_m T^m = 1/prod(1 - alpha_i T)", f"exact to order {order}")

    if intermediate_identity_holds():
        report.add("intermediate antisymmetrizer identity", True)
    else:
        report.fail("intermediate antisymmetrizer identity", False)
    for label, ok in stated_vanishings():
        if ok:
            report.add(f"{label} = 0", True)
        else:
            report.fail(f"{label} does not vanish", False)
    logger.info("unramified identity to order %d (%s): %s", order, "numeric" if numeric else "symbolic", report.status)
    return report


def verify_bessel_values(max_m: int) -> VerificationReport:
    """c_m = h_m(alpha_1..alpha_4) through the series oracle."""
    report = VerificationReport("bessel-values", citations=[CITATIONS["antisymmetrizer"]])
    closed = series_of(spin_lfactor(), max_m, "T")
    for m in range(max_m + 1):
        if not rf_equal(bessel_value(m), closed.coefficient(m)):
            report.fail(f"c_{m} differs from h_{m}", bessel_value(m))
            return report
    report.add("c_m = h_m for m up to", max_m)
    return report


# ─── Fattore di Tate non ramificato ──────────────────────────────────────────

TATE_VARS = ("nu", "u")


@dataclass
class TateFactor:
    """1 / (1 - nu(p) u^target) with u = p^-1."""

    target: int
    factor: RationalFn
    series_depth: int
    series_matches: bool
    value_at_nu_zero: Fraction
    measure_volume: Fraction


def tate_unramified(target: int, depth: int = TATE_SERIES_DEPTH, prime: int = 2) -> TateFactor:
    if prime < 2:
        raise InputError(f"prime must be at least 2, got {prime}")
    x = LaurentPoly.monomial(TATE_VARS, (1, target))
    factor = RationalFn(LaurentPoly.one(TATE_VARS), 1 - x)
    # somma sulle valutazioni: il coefficiente di nu^m è u^(target m)
    partial = [RationalFn(LaurentPoly.monomial(TATE_VARS, (0, target * m))) for m in range(depth + 1)]
    valuation_sum = TruncSeries("nu", depth, partial, TATE_VARS)
    matches = valuation_sum == series_of(factor, depth, "nu")
    at_zero = factor.evaluate({"nu": 0, "u": Fraction(1, prime)}).to_fraction()
    # d^x t = p/(p-1) dt/|t| ; vol(Z_p^x) = p/(p-1) * (1 - 1/p)
    volume = Fraction(prime, prime - 1) * (1 - Fraction(1, prime))
    return TateFactor(target, factor, depth, matches, at_zero, volume)


def verify_tate_unramified(target: int, depth: int = TATE_SERIES_DEPTH) -> VerificationReport:
    report = VerificationReport("tate-unramified", citations=[CITATIONS["tate-unramified"]])
    result = tate_unramified(target, depth)
    report.add("factor", result.factor)
    for label, ok, value in (
        (f"valuation sum = closed form mod nu^{depth + 1}", result.series_matches, depth),
        ("nu(p) = 0 gives 1", result.value_at_nu_zero == 1, result.value_at_nu_zero),
        ("vol(Z_p^x) = 1", result.measure_volume == 1, result.measure_volume),
    ):
        if ok:
            report.add(label, value)
        else:
            report.fail(label, value)
    return report
