"""
Test per gsp4_verify.core.algebra: Q(i, sqrt2), polinomi di Laurent,
funzioni razionali e serie troncate.
"""

import random
from fractions import Fraction

import pytest

from gsp4_verify.core.algebra import (
    I_UNIT,
    ONE,
    SQRT2,
    ZERO,
    ZETA8,
    CycScalar,
    LaurentPoly,
    RationalFn,
    rf_equal,
    series_of,
)
from gsp4_verify.core.errors import DegenerateParameterError, InputError, SingularExpansionError

XY = ("x", "y")

# ============================================================================
# FIXTURES
# ============================================================================


@pytest.fixture
def x():
    return LaurentPoly.variable(XY, "x")


@pytest.fixture
def y():
    return LaurentPoly.variable(XY, "y")


# ─── CycScalar ───────────────────────────────────────────────────────────────


class TestCycScalar:
    def test_i_squared_is_minus_one(self):
        assert I_UNIT * I_UNIT == -1

    def test_sqrt2_squared_is_two(self):
        assert SQRT2 * SQRT2 == 2

    def test_zeta8_is_primitive_eighth_root(self):
        assert ZETA8**2 == I_UNIT
        assert ZETA8**4 == -1
        assert ZETA8**8 == ONE

    def test_inverse_round_trip(self):
        z = CycScalar(Fraction(3, 2), -1, 2, Fraction(1, 5))
        assert z * z.inverse() == ONE

    def test_negative_power(self):
        assert (2 * I_UNIT) ** -1 == CycScalar(0, Fraction(-1, 2))

    def test_inverse_of_zero_raises(self):
        with pytest.raises(ZeroDivisionError):
            ZERO.inverse()

    def test_conjugate_fixes_sqrt2(self):
        z = CycScalar(1, 2, 3, 4)
        assert z.conjugate() == CycScalar(1, -2, 3, -4)

    def test_rational_equality_and_hash(self):
        assert CycScalar(Fraction(1, 2)) == Fraction(1, 2)
        assert hash(CycScalar(3)) == hash(Fraction(3))

    def test_to_fraction_rejects_irrational(self):
        with pytest.raises(InputError):
            SQRT2.to_fraction()

    def test_non_exact_input_rejected(self):
        with pytest.raises(TypeError):
            CycScalar(0.5)

    def test_str(self):
        assert str(CycScalar(1, -1)) == "1 - i"
        assert str(ZERO) == "0"


# ─── LaurentPoly ─────────────────────────────────────────────────────────────


class TestLaurentPoly:
    def test_no_stored_zeros(self, x):
        assert (x - x).is_zero()
        assert len(x + 1 - 1) == 1

    def test_negative_exponents(self, x):
        assert x * x**-1 == 1

    def test_negative_power_of_binomial_rejected(self, x, y):
        with pytest.raises(ArithmeticError):
            (x + y) ** -1

    def test_mismatched_variables_rejected(self, x):
        other = LaurentPoly.variable(("z",), "z")
        with pytest.raises(InputError):
            x + other

    def test_duplicate_variables_rejected(self):
        with pytest.raises(InputError):
            LaurentPoly(("x", "x"))

    def test_exponent_bound(self):
        with pytest.raises(OverflowError):
            LaurentPoly.monomial(("x",), [2**63])

    def test_evaluate(self, x, y):
        f = x**2 * y**-1 + 3
        assert f.evaluate({"x": 2, "y": 4}) == 4

    def test_evaluate_negative_power_of_zero(self, x):
        with pytest.raises(DegenerateParameterError):
            (x**-1).evaluate({"x": 0, "y": 1})

    def test_evaluate_missing_value(self, x):
        with pytest.raises(InputError):
            x.evaluate({"x": 1})

    def test_substitute(self, x, y):
        f = x * y
        g = f.substitute({"y": x}, XY)
        assert g == x**2

    def test_divide_exact(self, x, y):
        assert (x**2 - y**2).divide_exact(x - y) == x + y

    def test_divide_inexact(self, x, y):
        with pytest.raises(ArithmeticError):
            (x**2 + y**2).divide_exact(x - y)

    def test_coefficients_in(self, x, y):
        parts = (x**2 * y + 3 * y).coefficients_in("x")
        assert parts[2] == y
        assert parts[0] == 3 * y

    def test_text_is_deterministic(self, x, y):
        f = y - x + 2
        assert f.to_text() == (2 + y - x).to_text()
        assert f.to_text() == "-x + y + 2"

    def test_with_variables(self):
        t = LaurentPoly.variable(("t",), "t")
        assert t.with_variables(("s", "t")) == LaurentPoly.variable(("s", "t"), "t")


# ─── RationalFn ──────────────────────────────────────────────────────────────


class TestRationalFn:
    def test_monomial_denominator_folded(self, x):
        f = RationalFn(x**2, x)
        assert f.is_polynomial()
        assert f.as_poly() == x

    def test_equality_by_cross_multiplication(self, x, y):
        a = RationalFn(x - y, x**2 - y**2)
        b = RationalFn(LaurentPoly.one(XY), x + y)
        assert rf_equal(a, b)

    def test_simplified(self, x, y):
        f = RationalFn(x**2 - y**2, x - y).simplified()
        assert f.is_polynomial()

    def test_zero_denominator(self, x):
        with pytest.raises(InputError):
            RationalFn(x, LaurentPoly.zero(XY))

    def test_evaluate_pole(self, x):
        f = RationalFn(LaurentPoly.one(XY), x - 1)
        with pytest.raises(DegenerateParameterError):
            f.evaluate({"x": 1, "y": 0})


# ─── Series ──────────────────────────────────────────────────────────────────


class TestSeries:
    def test_geometric(self):
        t = LaurentPoly.variable(("T",), "T")
        s = series_of(RationalFn(LaurentPoly.one(("T",)), 1 - t), 5)
        assert all(s.coefficient(n) == 1 for n in range(6))

    def test_product_matches_expansion(self):
        t = LaurentPoly.variable(("T",), "T")
        one = LaurentPoly.one(("T",))
        a = series_of(RationalFn(one, 1 - t), 6)
        b = series_of(RationalFn(one, 1 + t), 6)
        assert a * b == series_of(RationalFn(one, 1 - t**2), 6)

    def test_first_difference(self):
        t = LaurentPoly.variable(("T",), "T")
        one = LaurentPoly.one(("T",))
        a = series_of(RationalFn(one, 1 - t), 4)
        b = series_of(RationalFn(one + t, one), 4)
        assert a.first_difference(b) == 2

    def test_denominator_vanishing_at_zero(self):
        t = LaurentPoly.variable(("T",), "T")
        with pytest.raises(SingularExpansionError):
            series_of(RationalFn(LaurentPoly.one(("T",)), t + t**2), 3)

    def test_negative_order(self):
        with pytest.raises(InputError):
            series_of(RationalFn(LaurentPoly.one(("T",))), -1)


# ─── Assiomi su input casuali ────────────────────────────────────────────────


def _random_scalar(rng: random.Random) -> CycScalar:
    return CycScalar(*(Fraction(rng.randint(-6, 6), rng.randint(1, 4)) for _ in range(4)))


def _random_laurent(rng: random.Random) -> LaurentPoly:
    terms = {(rng.randint(-2, 2), rng.randint(-2, 2)): _random_scalar(rng) for _ in range(rng.randint(1, 3))}
    return LaurentPoly(XY, terms)


@pytest.fixture(scope="module")
def scalar_triples():
    rng = random.Random(31)
    return [tuple(_random_scalar(rng) for _ in range(3)) for _ in range(40)]


@pytest.fixture(scope="module")
def laurent_triples():
    rng = random.Random(57)
    return [tuple(_random_laurent(rng) for _ in range(3)) for _ in range(25)]


class TestFieldAxioms:
    def test_associativity(self, scalar_triples):
        for a, b, c in scalar_triples:
            assert (a + b) + c == a + (b + c)
            assert (a * b) * c == a * (b * c)

    def test_commutativity(self, scalar_triples):
        for a, b, _ in scalar_triples:
            assert a + b == b + a
            assert a * b == b * a

    def test_distributivity(self, scalar_triples):
        for a, b, c in scalar_triples:
            assert a * (b + c) == a * b + a * c

    def test_inverses(self, scalar_triples):
        for a, _, _ in scalar_triples:
            assert a + (-a) == ZERO
            if a:
                assert a * a.inverse() == ONE

    def test_conjugation_is_field_automorphism(self, scalar_triples):
        for a, b, _ in scalar_triples:
            assert (a * b).conjugate() == a.conjugate() * b.conjugate()
            assert (a + b).conjugate() == a.conjugate() + b.conjugate()


class TestLaurentRingAxioms:
    def test_associativity(self, laurent_triples):
        for f, g, h in laurent_triples:
            assert (f + g) + h == f + (g + h)
            assert (f * g) * h == f * (g * h)

    def test_distributivity(self, laurent_triples):
        for f, g, h in laurent_triples:
            assert f * (g + h) == f * g + f * h

    def test_substitution_is_homomorphism(self, laurent_triples):
        images = {
            "x": LaurentPoly.monomial(XY, (1, -1), I_UNIT),
            "y": LaurentPoly.monomial(XY, (0, 2), SQRT2),
        }
        for f, g, _ in laurent_triples:
            assert (f * g).substitute(images, XY) == f.substitute(images, XY) * g.substitute(images, XY)
            assert (f + g).substitute(images, XY) == f.substitute(images, XY) + g.substitute(images, XY)

    def test_evaluation_is_homomorphism(self, laurent_triples):
        point = {"x": CycScalar(1, 1), "y": SQRT2}
        for f, g, _ in laurent_triples:
            assert (f * g).evaluate(point) == f.evaluate(point) * g.evaluate(point)
