"""
Test per i moduli di peso massimo, il trasporto di Cayley, la scansione
lambda_i(v), i K-tipi tau_(a,b) e le basi a_j / b_j di Sym^n.
"""

import random
from fractions import Fraction

import pytest

from gsp4_verify.core.algebra import I_UNIT, ONE
from gsp4_verify.core.errors import InputError
from gsp4_verify.core.linalg import axpy, vec
from gsp4_verify.core.reps import (
    KTypeModule,
    SymBasis,
    apply_N,
    build_irrep,
    cayley_vector,
    check_brackets,
    compact_weight_of,
    isotypic_project,
    lambda_scan,
    lowering_power,
    matched_pair,
    raise_lower_coefficient,
    raise_lower_identity,
    seed_is_highest_weight,
)
from gsp4_verify.core.roots import Weight, weyl_dimension

# ============================================================================
# FIXTURES
# ============================================================================


@pytest.fixture(scope="module")
def standard():
    return build_irrep(Weight(1, 0, 1))


@pytest.fixture(scope="module")
def module_21():
    return build_irrep(Weight(2, 1, 1))


# ─── Costruzione ─────────────────────────────────────────────────────────────


class TestBuildIrrep:
    @pytest.mark.parametrize("k,kp", [(0, 0), (1, 0), (1, 1), (2, 0), (2, 1), (3, 2)])
    def test_dimension_matches_weyl(self, k, kp):
        lam = Weight(k, kp, (k + kp) % 2)
        assert build_irrep(lam).dimension == weyl_dimension(lam)

    @pytest.mark.parametrize("k,kp", [(1, 0), (2, 2), (5, 3)])
    def test_seed_is_highest_weight(self, k, kp):
        assert seed_is_highest_weight(k, kp)

    def test_brackets_hold(self, module_21):
        assert check_brackets(module_21)

    def test_weight_spaces(self, standard):
        assert standard.weight_multiplicities() == {(1, 0): 1, (0, 1): 1, (0, -1): 1, (-1, 0): 1}

    def test_non_dominant_rejected(self):
        with pytest.raises(InputError):
            build_irrep(Weight(0, 1, 1))

    def test_degree_bound(self):
        with pytest.raises(InputError):
            build_irrep(Weight(7, 6, 1), max_degree=12)


# ─── Cayley e N ──────────────────────────────────────────────────────────────


class TestCayley:
    def test_weight_vector_becomes_compact_weight_vector(self, module_21):
        top = module_21.weight_space(2, 1)[0]
        cv = cayley_vector(module_21, top)
        assert (cv.compact_weight.n, cv.compact_weight.np) == (2, 1)
        assert compact_weight_of(module_21, cv.vector) == cv.compact_weight

    def test_lowest_weight(self, standard):
        bottom = standard.weight_space(-1, 0)[0]
        cv = cayley_vector(standard, bottom)
        assert standard.compact_eigenvalues(cv.vector) == (-I_UNIT, 0 * I_UNIT)

    def test_zero_vector_rejected(self, standard):
        with pytest.raises(InputError):
            cayley_vector(standard, {})

    def test_mixed_weights_rejected(self, standard):
        with pytest.raises(InputError):
            cayley_vector(standard, {0: ONE, 1: ONE})

    def test_n_is_an_involution_up_to_sign(self, standard):
        v = {0: ONE}
        twice = apply_N(standard, apply_N(standard, v))
        assert twice == v or twice == {0: -ONE}


# ─── Scansione ───────────────────────────────────────────────────────────────


class TestIsotypicProject:
    def test_parity_mismatch(self, standard):
        (idx,) = standard.weight_space(1, 0)
        projection = isotypic_project(standard, 2, 0, {idx: ONE})
        assert not projection.admissible
        assert projection.is_zero

    def test_standard_splits(self, standard):
        (idx,) = standard.weight_space(1, 0)
        parts = [isotypic_project(standard, p, q, {idx: ONE}) for p, q in ((1, 0), (0, 1))]
        assert all(part.admissible for part in parts)
        assert any(not part.is_zero for part in parts)


G_PRIME_OPERATORS = ("h1", "2e1", "-2e1", "h2", "2e2", "-2e2")


def _random_vectors(module, count, seed):
    rng = random.Random(seed)
    return [vec({j: rng.randint(-3, 3) for j in range(module.dimension)}) for _ in range(count)]


def _admissible_pairs(module):
    top = module.highest_weight.k
    return [(p, q) for p in range(top + 1) for q in range(top + 1) if isotypic_project(module, p, q, {}).admissible]


class TestIsotypicProjectionLaws:
    @pytest.fixture(scope="class")
    def module_32(self):
        return build_irrep(Weight(3, 2, 1))

    def test_idempotent(self, module_32):
        for v in _random_vectors(module_32, 10, seed=1):
            for p, q in _admissible_pairs(module_32):
                once = isotypic_project(module_32, p, q, v).vector
                assert isotypic_project(module_32, p, q, once).vector == once

    def test_commutes_with_g_prime(self, module_32):
        for v in _random_vectors(module_32, 10, seed=2):
            for p, q in _admissible_pairs(module_32):
                projected = isotypic_project(module_32, p, q, v).vector
                for x in G_PRIME_OPERATORS:
                    moved = isotypic_project(module_32, p, q, module_32.act(x, v)).vector
                    assert moved == module_32.act(x, projected)

    def test_components_sum_to_vector(self, module_32):
        pairs = _admissible_pairs(module_32)
        assert len(pairs) > 1
        for v in _random_vectors(module_32, 10, seed=3):
            total = {}
            for p, q in pairs:
                axpy(total, 1, isotypic_project(module_32, p, q, v).vector)
            assert total == v

    @pytest.mark.slow
    def test_commutes_on_many_vectors(self, module_32):
        pairs = _admissible_pairs(module_32)
        for v in _random_vectors(module_32, 200, seed=4):
            for p, q in pairs:
                projected = isotypic_project(module_32, p, q, v).vector
                assert isotypic_project(module_32, p, q, projected).vector == projected
                for x in G_PRIME_OPERATORS:
                    assert isotypic_project(module_32, p, q, module_32.act(x, v)).vector == module_32.act(x, projected)


class TestLambdaScan:
    def test_matched_pair_at_one(self):
        # i = 1 forza (r, s) = (p, 0)
        assert matched_pair(7, 4, 6, 3, 1) == (6, 0)
        assert matched_pair(3, 2, 2, 1, 1) == (2, 0)

    def test_matched_pair_out_of_range(self):
        assert matched_pair(7, 4, 6, 3, 0) is None
        assert matched_pair(7, 4, 6, 3, 2) is None

    def test_first_power_survives(self):
        (row,) = lambda_scan(3, 2)
        assert row.i == 1
        assert row.pair == (2, 0)
        assert row.nonzero
        assert row.scalar

    def test_i_zero_projects_to_zero(self):
        rows = lambda_scan(3, 2, (0, 1))
        assert [r.i for r in rows] == [0, 1]
        assert not rows[0].nonzero

    def test_empty_range(self):
        with pytest.raises(InputError):
            lambda_scan(3, 2, ())

    def test_negative_range(self):
        with pytest.raises(InputError):
            lambda_scan(3, 2, (-1,))

    @pytest.mark.slow
    def test_theorem_weight(self):
        (row,) = lambda_scan(5, 4)
        assert row.pair == (4, 0)
        assert row.nonzero


# ─── K-tipi ──────────────────────────────────────────────────────────────────


class TestKType:
    def test_lowering_power(self):
        assert lowering_power(KTypeModule(3, 0), 2) == {2: Fraction(2)}

    def test_lowering_power_out_of_range(self):
        with pytest.raises(InputError):
            lowering_power(KTypeModule(3, 0), 4)

    def test_invalid_k_type(self):
        with pytest.raises(InputError):
            KTypeModule(0, 1)

    @pytest.mark.parametrize("d", [0, 1, 4, 7])
    def test_raise_lower_identity(self, d):
        module = KTypeModule(d, 0)
        for n in range(d + 1):
            for m in range(n + 1):
                assert raise_lower_identity(module, m, n)

    def test_coefficient(self):
        # 3!/1! * (4-3+2)!/(4-3)! = 6 * 6
        assert raise_lower_coefficient(4, 2, 3) == 36

    def test_weights(self):
        tau = KTypeModule(3, -1)
        assert [tau.weight(s) for s in range(tau.dimension)] == [(-1, 3), (0, 2), (1, 1), (2, 0), (3, -1)]


# ─── Basi di Sym^n ───────────────────────────────────────────────────────────


class TestSymBasis:
    @pytest.mark.parametrize("n", [0, 1, 2, 5])
    def test_dual_pairing_is_identity(self, n):
        basis = SymBasis.build(n)
        for j in range(n + 1):
            for i in range(n + 1):
                assert basis.pairing(j, i) == (1 if i == j else 0)

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_b_weights(self, n):
        basis = SymBasis.build(n)
        assert [basis.b_weight(j) for j in range(n + 1)] == [2 * j - n for j in range(n + 1)]

    def test_a_weight(self):
        basis = SymBasis.build(3)
        w = basis.a_weight(0)
        assert (w.n, w.np) == (3, -3)

    @pytest.mark.parametrize("n", [1, 2, 3, 6])
    def test_conjugation_partner(self, n):
        basis = SymBasis.build(n)
        for j in range(n + 1):
            assert basis.conjugation_partner(j) == ((-1) ** n, n - j)

    def test_negative_degree(self):
        with pytest.raises(InputError):
            SymBasis.build(-1)
