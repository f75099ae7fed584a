"""
Test per la teoria locale non ramificata: azione di Weyl sui parametri di
Satake, antisimmetrizzatore, valori di Bessel e fattore di Tate.
"""

from fractions import Fraction

import pytest

from gsp4_verify.core.algebra import LaurentPoly, RationalFn
from gsp4_verify.core.errors import InputError
from gsp4_verify.core.unramified import (
    SATAKE_VARS,
    SatakeSymbols,
    alpha,
    alpha_relation_holds,
    alpha_word,
    antisymmetrize,
    bessel_series,
    bessel_support,
    bessel_value,
    bessel_value_at,
    complete_homogeneous,
    intermediate_identity_holds,
    satake_action_consistent,
    satake_monomial,
    satake_weyl_group,
    spin_lfactor_weyl_invariant,
    stated_vanishings,
    tate_unramified,
    verify_bessel_values,
    verify_tate_unramified,
    verify_unramified,
)


class TestSatakeAction:
    def test_eight_elements(self):
        assert len(satake_weyl_group()) == 8

    def test_homomorphism(self):
        assert satake_action_consistent()

    def test_alpha_relation(self):
        assert alpha_relation_holds()

    def test_spin_factor_invariant(self):
        assert spin_lfactor_weyl_invariant()

    def test_unknown_alpha(self):
        with pytest.raises(InputError):
            alpha(5)

    def test_antisymmetrizer_kills_invariants(self):
        assert antisymmetrize(LaurentPoly.one(SATAKE_VARS)).is_zero()


class TestAntisymmetrizer:
    def test_stated_vanishings(self):
        failing = [label for label, ok in stated_vanishings() if not ok]
        assert failing == []

    def test_intermediate_identity(self):
        assert intermediate_identity_holds()

    @pytest.mark.parametrize(
        "f",
        [
            satake_monomial(2, 1, 0),
            satake_monomial(0, -1, 3, t=1),
            alpha_word({3: 2, 4: -1}),
            satake_monomial(1, 0, 0) + 3 * satake_monomial(0, 2, -1),
        ],
    )
    def test_sign_rule(self, f):
        a = antisymmetrize(f)
        for w in satake_weyl_group():
            assert w(a) == w.sign * a
            assert antisymmetrize(w(f)) == w.sign * a

    def test_applied_twice_scales_by_group_order(self):
        f = satake_monomial(3, 1, -2)
        a = antisymmetrize(f)
        assert antisymmetrize(a) == 8 * a


class TestBesselValues:
    def test_c0_is_one(self):
        assert bessel_value(0) == RationalFn(LaurentPoly.one(SATAKE_VARS))

    def test_c1_is_sum_of_alphas(self):
        total = alpha(1) + alpha(2) + alpha(3) + alpha(4)
        assert bessel_value(1) == RationalFn(total)

    def test_negative_m(self):
        with pytest.raises(InputError):
            bessel_value(-1)

    def test_support(self):
        assert bessel_support(-1) is None
        assert bessel_support(2) == -3

    def test_series_exponents(self):
        series = bessel_series(3)
        assert len(series.coefficients) == 4
        assert series.p_exponent(3) == Fraction(-9, 2)

    def test_numeric_value_matches_complete_homogeneous(self):
        sp = SatakeSymbols(Fraction(2), Fraction(1, 3), Fraction(-5, 7))
        alphas = [a.to_fraction() for a in sp.alphas()]
        h = complete_homogeneous(alphas, 3)
        assert [bessel_value_at(m, sp) for m in range(4)] == h

    def test_complete_homogeneous(self):
        assert complete_homogeneous([Fraction(2), Fraction(3)], 2) == [1, 5, 19]

    def test_partial_symbols(self):
        with pytest.raises(InputError):
            SatakeSymbols(Fraction(1)).values()

    def test_verify_values(self):
        assert verify_bessel_values(4).passed


class TestUnramifiedIdentity:
    def test_symbolic(self):
        report = verify_unramified(6)
        assert report.passed
        assert report.seed is None

    def test_numeric_records_seed(self):
        report = verify_unramified(5, numeric=True, seed=7, samples=3)
        assert report.passed
        assert report.seed == 7
        assert report.witnesses[0].value == 3

    def test_numeric_draws_seed_when_missing(self):
        report = verify_unramified(3, numeric=True, samples=2)
        assert report.passed
        assert isinstance(report.seed, int)

    def test_order_must_be_positive(self):
        with pytest.raises(InputError):
            verify_unramified(0)

    @pytest.mark.slow
    def test_full_order(self):
        assert verify_unramified(25).passed


class TestTateUnramified:
    def test_factor(self):
        result = tate_unramified(3, depth=8)
        assert result.series_matches
        assert result.value_at_nu_zero == 1
        assert result.measure_volume == 1

    def test_report(self):
        assert verify_tate_unramified(2, 10).passed

    def test_prime(self):
        with pytest.raises(InputError):
            tate_unramified(1, prime=1)
