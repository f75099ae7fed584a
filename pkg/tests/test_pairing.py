"""
Test per le costanti A, B, C, i coefficienti di proiezione,
l'assemblaggio a quattro termini e la sopravvivenza archimedea.
"""

from fractions import Fraction
from math import factorial

import pytest

from gsp4_verify.core.algebra import CycScalar
from gsp4_verify.core.errors import InputError
from gsp4_verify.core.pairing import (
    a_pairing,
    assemble,
    constant_a,
    constant_b,
    constant_c,
    constants,
    normalized_pairing,
    projection_coeffs,
    require_hypotheses,
    survival,
    survival_report,
    theorem_hypotheses,
    vanishing_constraints,
    verify_projection_coeffs,
)
from gsp4_verify.models.config import QUOTED_BETA3


class TestConstants:
    def test_a_matches_factorials(self):
        n, i, j = 11, 3, 2
        naive = (
            factorial(n + 4 - i) // factorial(n + 4 - i - j)
            * factorial(i + j) // factorial(i - j)
            * factorial(n - i + j) // factorial(n - i)
        )
        assert constant_a(7, 4, i, j) == naive == 1425600

    def test_a_with_j_zero(self):
        assert all(constant_a(7, 4, i, 0) == 1 for i in range(11))

    def test_b_and_c(self):
        assert constant_b(7, 4, 0) == 15
        assert constant_c(7, 4, 0) == 0
        assert constant_c(7, 4, 3) == 3 * 9

    def test_index_range(self):
        with pytest.raises(InputError):
            constant_a(7, 4, 11, 0)
        with pytest.raises(InputError):
            constant_a(7, 4, 2, 3)
        with pytest.raises(InputError):
            constant_b(2, 3, 0)

    def test_table_shape(self):
        table = constants(7, 4)
        assert sorted(table.B) == list(range(11))
        assert len(table.A) == 1 + 2 + 3 + 4 * 8

    def test_falling_extension_outside_range(self):
        # fuori dal range l'estensione fattoriale non solleva
        assert constant_b(7, 4, 11, strict=False) == 12 * 4


class TestBasisPairing:
    def test_value(self):
        assert a_pairing(1, 1, 1, 0, 0, 1) == CycScalar(Fraction(1, 4))

    def test_unmatched_indices_vanish(self):
        assert a_pairing(2, 1, 1, 0, 0, 1) == 0

    def test_range_checked(self):
        with pytest.raises(InputError):
            a_pairing(1, 1, 2, 0, 0, 1)


class TestProjectionCoefficients:
    def test_values(self):
        coeffs = projection_coeffs()
        assert coeffs.alpha == Fraction(1, 4)
        assert coeffs.beta3 == Fraction(1, 24)

    def test_independent_of_basis_order(self):
        base = projection_coeffs()
        permuted = projection_coeffs(((0, 2), (2, 0), (1, 1)), ((-1, -1), (0, -2), (-2, 0)))
        assert (permuted.alpha, permuted.beta3) == (base.alpha, base.beta3)

    def test_beta3_disagrees_with_quoted(self):
        report = verify_projection_coeffs()
        assert not report.passed
        assert "beta3" in report.witnesses[0].description
        assert QUOTED_BETA3 == Fraction(3, 80)


class TestHypotheses:
    def test_theorem_weight(self):
        assert all(holds for _, holds in theorem_hypotheses(7, 4))

    def test_small_weights_excluded(self):
        names = {name for name, holds in theorem_hypotheses(3, 2) if not holds}
        assert names == {"k != 3", "k' != 2"}

    def test_require(self):
        with pytest.raises(InputError, match="k odd"):
            require_hypotheses(6, 4)

    def test_vanishing_constraints(self):
        cases = vanishing_constraints(6, 3, 7, 4)
        assert [c.i for c in cases] == [7, 1, 10, 10]
        assert [c.index_value for c in cases] == [3, 3, 3, 0]
        assert all(c.integral for c in cases)


class TestAssemble:
    def test_term_shapes(self):
        expression = assemble(6, 3, 7, 4)
        assert [len(t.summands) for t in expression.terms] == [4, 1, 4, 1]
        assert [t.constant_label for t in expression.terms] == ["C1", "C2", "C3", "C4"]

    def test_survivor_token(self):
        expression = assemble(6, 3, 7, 4)
        (_, token), = expression.terms[1].summands
        assert (token.n, token.r, token.s, token.conjugate) == (13, -8, 3, False)

    def test_prefactors(self):
        expression = assemble(6, 3, 7, 4)
        assert expression.terms[0].coefficient == Fraction(3, 160) / 7
        assert expression.terms[1].coefficient == Fraction(1, 8) / 4

    def test_computed_beta3(self):
        expression = assemble(6, 3, 7, 4, beta3=projection_coeffs().beta3)
        assert expression.beta3 == Fraction(1, 24)

    def test_not_admissible(self):
        with pytest.raises(InputError):
            assemble(8, 1, 7, 4)

    def test_negative_pq(self):
        with pytest.raises(InputError):
            assemble(-1, 3, 7, 4)


class TestSurvival:
    @pytest.mark.parametrize("k,kp", [(3, 2), (5, 4), (7, 4), (9, 6)])
    def test_only_second_term_survives(self, k, kp):
        assert survival(k, kp).survivors == [2]

    def test_report_passes(self):
        assert survival_report(7, 4).passed

    def test_needs_parity(self):
        with pytest.raises(InputError):
            survival(7, 3)


class TestNormalizedPairing:
    @pytest.mark.parametrize("k,kp", [(3, 2), (7, 4), (9, 6)])
    def test_ratio_is_one_sixteenth(self, k, kp):
        assert normalized_pairing(k, kp).ratio == Fraction(1, 16)

    def test_requires_strict_order(self):
        with pytest.raises(InputError):
            normalized_pairing(4, 4)
