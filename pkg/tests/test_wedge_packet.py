"""
Test per gli spazi Lambda^a p+ (x) Lambda^b p-, il pacchetto di serie
discreta e i tipi di Hodge.
"""

import pytest

from gsp4_verify.core.errors import ConstructionError, InputError
from gsp4_verify.core.packet import (
    coefficient_weight,
    dual_hodge_types,
    gk_cohomology_dims,
    hodge_types,
    lpacket,
    stable_ranks,
)
from gsp4_verify.core.roots import Weight
from gsp4_verify.core.wedge import KType, WedgeSpace, peel_character, wedge_decompose


class TestWedgeSpace:
    def test_dimensions(self):
        assert WedgeSpace(2, 1).dimension == 9
        assert WedgeSpace(3, 0).dimension == 1
        assert WedgeSpace(0, 0).dimension == 1

    def test_degree_range(self):
        with pytest.raises(InputError):
            WedgeSpace(4, 0)

    def test_orders_must_permute_labels(self):
        with pytest.raises(InputError):
            WedgeSpace(1, 1, plus_order=((2, 0), (2, 0), (0, 2)))

    def test_key_sign(self):
        space = WedgeSpace(2, 0)
        a = space.key(((2, 0), (1, 1)), ())
        b = space.key(((1, 1), (2, 0)), ())
        assert {k: -c for k, c in a.items()} == b

    def test_repeated_factor_is_zero(self):
        space = WedgeSpace(2, 0)
        assert space.key(((2, 0), (2, 0)), ()) == {}

    def test_compact_action_only(self):
        from gsp4_verify.core.lie import ROOT_VECTORS

        space = WedgeSpace(1, 0)
        with pytest.raises(InputError):
            space.act(ROOT_VECTORS[(2, 0)], space.key(((2, 0),), ()))

    def test_raise_kills_top(self):
        space = WedgeSpace(1, 0)
        assert space.raise_(space.key(((2, 0),), ())) == {}


class TestWedgeDecomposition:
    @pytest.mark.parametrize(
        "pattern,labels",
        [
            ((2, 1), ["tau(3,-1)", "tau(2,0)", "tau(1,1)"]),
            ((1, 2), ["tau(1,-3)", "tau(0,-2)", "tau(-1,-1)"]),
            ((3, 0), ["tau(3,3)"]),
            ((0, 3), ["tau(-3,-3)"]),
        ],
    )
    def test_k_types(self, pattern, labels):
        decomposition = wedge_decompose(pattern)
        assert sorted(decomposition.labels()) == sorted(labels)
        assert all(m == 1 for m in decomposition.components.values())

    def test_dimension_covered(self):
        decomposition = wedge_decompose((2, 1))
        assert sum(t.dimension for t in decomposition.components) == decomposition.dimension == 9

    def test_invalid_pattern(self):
        with pytest.raises(InputError):
            wedge_decompose((2, 2))

    def test_peel_rejects_non_character(self):
        with pytest.raises(ConstructionError):
            peel_character({(1, 0): 1})

    def test_peel_single_k_type(self):
        assert peel_character({(2, 0): 1, (1, 1): 1, (0, 2): 1}) == {KType(2, 0): 1}


class TestPacket:
    def test_minimal_k_types(self):
        info = lpacket(Weight(7, 4, 1))
        assert info.hc_parameter == (9, 5)
        assert info.k_types() == [(10, 7), (10, -5), (5, -10), (-7, -10)]
        assert [m.label for m in info.members] == ["pi^H", "pi^W", "pibar^W", "pibar^H"]

    def test_gk_cohomology_one_dimensional(self):
        assert set(gk_cohomology_dims(Weight(3, 2, 1)).values()) == {1}

    @pytest.mark.parametrize("k,kp,c", [(7, 4, 15), (3, 2, 1), (4, 0, -2), (5, 5, 0)])
    def test_hodge_sums(self, k, kp, c):
        types = hodge_types(Weight(k, kp, c))
        assert types.sums() == [3 - c] * 4
        assert types.is_swap_stable

    def test_dual_hodge_types(self):
        types = dual_hodge_types(6, 3, 7, 4)
        assert types.t == -10
        assert types.sums() == [3 + 9] * 4

    def test_coefficient_weight(self):
        assert coefficient_weight(6, 3, 7, 4) == Weight(7, 4, 15)

    def test_stable_ranks(self):
        assert stable_ranks(Weight(7, 4, 15)) == (2, 1, 1)

    def test_stable_ranks_need_bound(self):
        with pytest.raises(InputError):
            stable_ranks(Weight(1, 0, -1))

    def test_non_dominant_packet(self):
        with pytest.raises(InputError):
            lpacket(Weight(0, 2, 0))
