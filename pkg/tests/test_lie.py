"""
Test per le matrici esplicite di gsp(4): forma simplettica, vettori radice,
decomposizione di Cartan, J e N.
"""

import pytest

from gsp4_verify.core.algebra import I_UNIT, ONE
from gsp4_verify.core.errors import InputError
from gsp4_verify.core.lie import (
    CHEVALLEY,
    J,
    J_INV,
    N,
    PSI,
    ROOT_VECTORS,
    T1,
    T2,
    E,
    LieMatrix,
    ad_conjugate,
    bracket,
    cartan_split,
    chevalley_coordinates,
    in_cartan,
    in_gsp4_algebra,
    in_k,
    in_sp4,
    iota_push,
    root_eigen_holds,
    similitude,
    torus_element,
)


class TestMembership:
    @pytest.mark.parametrize("name", sorted(CHEVALLEY))
    def test_chevalley_in_sp4(self, name):
        assert in_sp4(CHEVALLEY[name])

    @pytest.mark.parametrize("label", sorted(ROOT_VECTORS))
    def test_root_vectors_in_sp4(self, label):
        assert in_sp4(ROOT_VECTORS[label])

    def test_identity_in_gsp4_not_sp4(self):
        assert not in_sp4(LieMatrix.identity())
        assert in_gsp4_algebra(LieMatrix.identity())

    def test_similitude_of_identity_and_psi(self):
        assert similitude(LieMatrix.identity()) == 1
        assert similitude(PSI) == 1

    def test_similitude_rejects_non_symplectic(self):
        with pytest.raises(InputError):
            similitude(E(0, 0) + LieMatrix.identity())

    def test_n_has_similitude_minus_one(self):
        assert similitude(N) == -1

    def test_rotation_is_symplectic(self):
        assert similitude(torus_element(0, 1, 1, 0)) == 1


class TestChevalley:
    def test_coordinates(self):
        x = CHEVALLEY["e1+e2"] * 3 + CHEVALLEY["h1"]
        assert chevalley_coordinates(x) == {"e1+e2": 3, "h1": ONE}

    def test_coordinates_outside_algebra(self):
        with pytest.raises(InputError):
            chevalley_coordinates(E(0, 0))

    def test_raising_brackets(self):
        x = bracket(CHEVALLEY["e1-e2"], CHEVALLEY["2e2"])
        assert chevalley_coordinates(x) == {"e1+e2": ONE} or chevalley_coordinates(x) == {"e1+e2": -ONE}


class TestRootVectors:
    @pytest.mark.parametrize("label", sorted(ROOT_VECTORS))
    @pytest.mark.parametrize("a,b", [(1, 0), (0, 1), (2, 3)])
    def test_eigenvector_of_compact_cartan(self, label, a, b):
        assert root_eigen_holds(label, a, b)

    def test_cartan_membership(self):
        assert in_cartan(T1 * 2 + T2)
        assert not in_cartan(CHEVALLEY["h1"])

    def test_compact_part(self):
        assert in_k(T1)
        assert in_k(ROOT_VECTORS[(1, -1)])
        assert not in_k(ROOT_VECTORS[(2, 0)])

    def test_iota_push(self):
        assert iota_push("e1") == ROOT_VECTORS[(2, 0)]
        assert iota_push({"e2": 2, "e4": 1}) == ROOT_VECTORS[(0, 2)] * 2 + ROOT_VECTORS[(0, -2)]

    def test_iota_push_unknown(self):
        with pytest.raises(InputError):
            iota_push("e5")


class TestCartanDecomposition:
    @pytest.mark.parametrize("name", sorted(CHEVALLEY))
    def test_parts_sum_back(self, name):
        parts = cartan_split(CHEVALLEY[name])
        assert parts.total() == CHEVALLEY[name]
        assert in_k(parts.k)

    def test_rejects_outside_algebra(self):
        with pytest.raises(InputError):
            cartan_split(LieMatrix.identity())


class TestCayley:
    def test_j_inverse(self):
        assert J @ J_INV == LieMatrix.identity()

    def test_j_conjugates_cartan_into_compact_cartan(self):
        image = ad_conjugate(J, CHEVALLEY["h1"])
        assert image == T1 * -I_UNIT
        assert in_cartan(image)

    def test_inverse_of_singular(self):
        with pytest.raises(InputError):
            LieMatrix.zero().inverse()

    def test_shape_checked(self):
        with pytest.raises(InputError):
            LieMatrix.of([[1, 0, 0, 0]] * 3)
