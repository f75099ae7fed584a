"""
Discrete-series packet bookkeeping: Harish-Chandra parameter, minimal
K-types, Hodge types of the interior cohomology and the rank table in
the stable case.
"""

import logging
from typing import Dict, Tuple

from gsp4_verify.core.errors import InputError
from gsp4_verify.core.roots import Weight, require_dominant
from gsp4_verify.models.results import HodgeType, PacketInfo, PacketMember

logger = logging.getLogger(__name__)

MEMBER_LABELS = ("pi^H", "pi^W", "pibar^W", "pibar^H")


def lpacket(lam: Weight) -> PacketInfo:
    require_dominant(lam)
    k, kp = lam.k, lam.kp
    k_types = [(k + 3, kp + 3), (k + 3, -kp - 1), (kp + 1, -k - 3), (-kp - 3, -k - 3)]
    members = [PacketMember(label, kt) for label, kt in zip(MEMBER_LABELS, k_types)]
    return PacketInfo(lam, (k + 2, kp + 1), members)


def hodge_types(lam: Weight) -> HodgeType:
    """The four (r, s) bidegrees; each pair sums to 3 - c."""
    k, kp, t = lam.k, lam.kp, lam.t
    pairs = [
        (3 - t, -k - kp - t),
        (2 - kp - t, 1 - k - t),
        (1 - k - t, 2 - kp - t),
        (-k - kp - t, 3 - t),
    ]
    return HodgeType(pairs, t)


def dual_hodge_types(p: int, q: int, k: int, kp: int) -> HodgeType:
    """Hodge types of the dual coefficient system lambda(k, k', -(p+q)), t' = -(k+k'+p+q)/2."""
    return hodge_types(Weight(k, kp, -(p + q)))


def coefficient_weight(p: int, q: int, k: int, kp: int) -> Weight:
    """W = lambda(k, k', p+q+6)."""
    return Weight(k, kp, p + q + 6)


def stable_ranks(lam: Weight) -> Tuple[int, int, int]:
    """(rank M_B^-(-1), rank F^0 M_dR, rank Ext^1) when every multiplicity is one."""
    require_dominant(lam)
    bound = 2 - lam.kp - lam.t
    if bound >= 0:
        raise InputError(f"2 - k' - t < 0 fails for {lam}: 2 - k' - t = {bound}")
    betti, de_rham = 2, 1
    ext = betti - de_rham
    return betti, de_rham, ext


def gk_cohomology_dims(lam: Weight) -> Dict[str, int]:
    """(g, K)-cohomology in middle degree of each packet member."""
    info = lpacket(lam)
    return {m.label: 1 for m in info.members}
