"""
Test per gli integrali archimedei: parametri di Meijer, regola dei pesi,
classi di pi, valori esatti di Gamma, integrale di Tate e trasformata di Mellin.

Le quadrature ad alta precisione sono marcate ``slow``.
"""

from fractions import Fraction

import mpmath
import pytest

from gsp4_verify.core.archimedean import (
    arch_vanishing,
    bessel_radial,
    contour_abscissa,
    gamma_exact,
    has_integer_differences,
    meijer_g,
    meijer_g_residue,
    meijer_params,
    mellin_exponent,
    mellin_grid,
    mellin_verify,
    pi_power_class,
    survivor_params,
    survivor_weights,
    tate_arch_verify,
    verify_gamma,
    verify_meijer_dual,
)
from gsp4_verify.core.errors import InputError, UnsupportedArgumentError
from gsp4_verify.models.results import MeijerParams

# ============================================================================
# FIXTURES
# ============================================================================


@pytest.fixture
def survivor_74():
    return survivor_params(7, 4)


@pytest.fixture
def generic_params():
    """Parametri senza differenze intere tra i c_j."""
    return MeijerParams(
        Fraction(31, 11), Fraction(47, 11), Fraction(5, 13), Fraction(12, 13), Fraction(20, 13), Fraction(29, 13)
    )


# ============================================================================
# PARAMETRI
# ============================================================================


class TestMeijerParams:
    def test_survivor_weights(self):
        assert survivor_weights(7, 4) == (10, -5, 13, 6, 3)

    def test_survivor_values(self, survivor_74):
        assert survivor_74.a == (Fraction(43, 4), Fraction(5, 4))
        assert survivor_74.c == (Fraction(9, 4), Fraction(19, 4), Fraction(7, 4), Fraction(17, 4))

    def test_explicit_matches_survivor(self, survivor_74):
        assert meijer_params(10, -5, 13, 6, 3) == survivor_74

    def test_shifted_arguments(self, survivor_74):
        shift = mellin_exponent(6, 3) / 2
        assert [c + shift for c in survivor_74.c] == [Fraction(21, 2), 13, 10, Fraction(25, 2)]
        assert [a + shift for a in survivor_74.a] == [19, Fraction(19, 2)]

    def test_mellin_exponent(self):
        assert mellin_exponent(6, 3) == Fraction(33, 2)
        assert mellin_exponent(2, 1) == Fraction(15, 2)

    def test_integer_differences(self, survivor_74, generic_params):
        assert has_integer_differences(survivor_74)
        assert not has_integer_differences(generic_params)


class TestVanishing:
    def test_survivor_does_not_vanish(self):
        assert not arch_vanishing(13, 10, -5, -8, 3)

    def test_first_condition_broken(self):
        assert arch_vanishing(13, 10, -5, -7, 3)

    def test_second_condition_broken(self):
        assert arch_vanishing(13, 10, -5, -8, 2)


class TestMellinGrid:
    def test_pairs(self):
        assert mellin_grid(9) == [(3, 2), (5, 2), (5, 4), (7, 2)]

    def test_parities(self):
        for k, kp in mellin_grid(16):
            assert k % 2 == 1 and kp % 2 == 0 and k > kp > 0 and k + kp <= 16


# ============================================================================
# GAMMA E CLASSI DI PI
# ============================================================================


class TestGammaExact:
    def test_integer(self):
        assert gamma_exact(5) == (Fraction(24), Fraction(0))

    def test_half(self):
        assert gamma_exact(Fraction(1, 2)) == (Fraction(1), Fraction(1, 2))

    def test_seven_halves(self):
        assert gamma_exact(Fraction(7, 2)) == (Fraction(15, 8), Fraction(1, 2))

    def test_against_mpmath(self):
        with mpmath.workdps(30):
            rational, _ = gamma_exact(Fraction(9, 2))
            expected = mpmath.mpf(rational.numerator) / rational.denominator * mpmath.sqrt(mpmath.pi)
            assert abs(mpmath.gamma(mpmath.mpf(9) / 2) - expected) < mpmath.mpf(10) ** -25

    def test_verify_gamma_passes(self):
        report = verify_gamma(max_x=10, digits=20)
        assert report.passed


class TestPiPowerClass:
    def test_integer_class(self):
        assert pi_power_class(3).pi_exponent == 0

    def test_half_integer_class(self):
        assert pi_power_class(Fraction(5, 2)).pi_exponent == Fraction(1, 2)

    def test_non_positive(self):
        with pytest.raises(InputError):
            pi_power_class(0)
        with pytest.raises(InputError):
            pi_power_class(Fraction(-1, 2))

    def test_third_is_unsupported(self):
        with pytest.raises(UnsupportedArgumentError):
            pi_power_class(Fraction(1, 3))


# ============================================================================
# MEIJER G
# ============================================================================


class TestContourAbscissa:
    @pytest.mark.parametrize("k,kp,expected", [(7, 4, Fraction(11, 8)), (5, 4, Fraction(7, 8))])
    def test_line_moved_off_kernel_zero(self, k, kp, expected):
        params = survivor_params(k, kp)
        # la retta standard min(c) - 1/2 passa per a_2
        assert min(params.c) - Fraction(1, 2) == params.a[1]
        assert contour_abscissa(params) == expected

    def test_generic_keeps_half_offset(self, generic_params):
        assert contour_abscissa(generic_params) == Fraction(5, 13) - Fraction(1, 2)

    def test_every_survivor_avoids_zeros(self):
        for k, kp in mellin_grid(16):
            params = survivor_params(k, kp)
            sigma0 = contour_abscissa(params)
            assert sigma0 < min(params.c)
            assert not any((a - sigma0).denominator == 1 and a - sigma0 <= 0 for a in params.a)


class TestMeijerG:
    def test_non_positive_argument(self, survivor_74):
        with pytest.raises(InputError):
            meijer_g(0, survivor_74, digits=20)

    def test_residue_refuses_integer_differences(self, survivor_74):
        with pytest.raises(UnsupportedArgumentError):
            meijer_g_residue(1, survivor_74, digits=20)

    def test_survivor_is_contour_only(self, survivor_74):
        result = meijer_g(1, survivor_74, digits=20)
        assert result.mode == "contour-only"
        assert result.cross_check_error is None
        assert result.value != 0
        assert result.imaginary < 1e-10

    @pytest.mark.parametrize("k,kp", [(7, 4), (5, 4)])
    def test_survivor_contour_terminates(self, k, kp):
        result = meijer_g(Fraction(3, 2), survivor_params(k, kp), digits=20)
        assert result.value != 0
        assert result.mode == "contour-only"

    @pytest.mark.slow
    def test_generic_cross_check(self, generic_params):
        result = meijer_g(Fraction(3, 2), generic_params, digits=25)
        assert result.mode == "contour+residue"
        assert result.cross_check_error < 1e-12

    @pytest.mark.slow
    def test_dual_report_records_seed(self):
        report = verify_meijer_dual(sets=2, seed=11, digits=20)
        assert report.seed == 11
        assert report.passed


class TestBesselRadial:
    def test_non_positive(self, survivor_74):
        with pytest.raises(InputError):
            bessel_radial(0, survivor_74, 6, 3, digits=20)

    @pytest.mark.slow
    def test_normalized_at_one(self, survivor_74):
        result = bessel_radial(1, survivor_74, 6, 3, digits=20)
        assert abs(result.value - 1) < mpmath.mpf(10) ** -12

    @pytest.mark.slow
    def test_survivor_54_normalized_at_one(self):
        result = bessel_radial(1, survivor_params(5, 4), 4, 3, digits=20)
        assert abs(result.value - 1) < mpmath.mpf(10) ** -12


# ============================================================================
# TATE E MELLIN
# ============================================================================


class TestTateArchimedean:
    def test_parity_mismatch(self):
        with pytest.raises(InputError):
            tate_arch_verify(1, 1, 2, 1, digits=20)

    def test_unit_weights_agree_with_quoted(self):
        report = tate_arch_verify(1, 1, 1, 1, digits=20)
        assert report.passed
        assert [w.description for w in report.witnesses[:3]] == ["Z_1", "Z_2", "quadrature product"]

    def test_quoted_form_differs_for_larger_weights(self):
        report = tate_arch_verify(6, 3, -8, 3, digits=20)
        assert not report.passed
        assert report.witnesses[0].description == "quadrature product differs from the quoted form"

    def test_moment_form_always_holds(self):
        report = tate_arch_verify(2, 1, 0, 1, digits=20)
        moment = next(w for w in report.witnesses if w.description.startswith("Gaussian moment form"))
        assert moment.error < 1e-15

    def test_zero_weights_quoted_form_undefined(self):
        report = tate_arch_verify(0, 0, 0, 0, digits=20)
        quoted = next(w for w in report.witnesses if w.description.startswith("quoted form"))
        assert "undefined" in quoted.value
        assert quoted.error is None
        assert report.passed

    @pytest.mark.parametrize("p,q", [(-1, 1), (1, -3)])
    def test_negative_weights_rejected(self, p, q):
        with pytest.raises(InputError):
            tate_arch_verify(p, q, p, q, digits=20)


class TestMellin:
    def test_divergent_at_zero(self):
        params = MeijerParams(Fraction(1), Fraction(2), Fraction(-9), Fraction(1), Fraction(2), Fraction(3))
        with pytest.raises(InputError):
            mellin_verify(params, 0, 0, digits=20)

    @pytest.mark.slow
    def test_survivor_32(self):
        report = mellin_verify(survivor_params(3, 2), 2, 1, digits=20)
        assert report.witnesses[0].value == Fraction(15, 2)
        assert report.passed

    @pytest.mark.slow
    @pytest.mark.parametrize("k,kp,exponent", [(7, 4, Fraction(33, 2)), (5, 4, Fraction(27, 2))])
    def test_survivor_on_kernel_zero_line(self, k, kp, exponent):
        report = mellin_verify(survivor_params(k, kp), k - 1, kp - 1, digits=20)
        assert report.witnesses[0].value == exponent
        assert report.passed
