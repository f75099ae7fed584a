"""
Exterior powers Lambda^a p+ (x) Lambda^b p- as explicit K-modules.

Basis vectors are decomposable wedges of the non-compact root vectors;
the K-action is the adjoint action of the complexified compact algebra,
computed from real brackets of the 4x4 matrices and read back in the
p+ / p- bases.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple

from gsp4_verify.core.algebra import ONE, ZERO, CycScalar
from gsp4_verify.core.errors import ConstructionError, InputError
from gsp4_verify.core.lie import (
    P_MINUS_LABELS,
    P_PLUS_LABELS,
    ROOT_VECTORS,
    Label,
    LieMatrix,
    bracket,
    in_k,
    p_minus,
    p_plus,
)
from gsp4_verify.core.linalg import EchelonBasis, Vec, axpy, relations

logger = logging.getLogger(__name__)

PATTERNS: Tuple[Tuple[int, int], ...] = ((3, 0), (2, 1), (1, 2), (0, 3))

WedgeKey = Tuple[Tuple[int, ...], Tuple[int, ...]]

# Coordinate Z[i][j] che individua ciascun vettore radice in p+ e p-
_Z_POSITION: Dict[Label, Tuple[int, int]] = {
    (2, 0): (0, 0),
    (1, 1): (0, 1),
    (0, 2): (1, 1),
    (-2, 0): (0, 0),
    (-1, -1): (0, 1),
    (0, -2): (1, 1),
}

E_LABEL: Label = (1, -1)
F_LABEL: Label = (-1, 1)


def _read_p(x: LieMatrix, labels: Sequence[Label], plus: bool) -> Dict[Label, CycScalar]:
    z = x.block(0, 0)
    coords = {lab: z[_Z_POSITION[lab][0]][_Z_POSITION[lab][1]] for lab in labels}
    rebuilt = (p_plus if plus else p_minus)([[z[0][0], z[0][1]], [z[1][0], z[1][1]]])
    if rebuilt != x:
        raise ConstructionError("bracket left p+ / p-")
    return {lab: c for lab, c in coords.items() if c}


def _sort_sign(positions: Sequence[int]) -> Tuple[Optional[Tuple[int, ...]], int]:
    """Sorted positions and the permutation sign; None on a repeated factor."""
    if len(set(positions)) != len(positions):
        return None, 0
    items = list(positions)
    sign = 1
    for i in range(len(items)):
        for j in range(len(items) - 1 - i):
            if items[j] > items[j + 1]:
                items[j], items[j + 1] = items[j + 1], items[j]
                sign = -sign
    return tuple(items), sign


@dataclass(frozen=True)
class KType:
    """tau_(a, b) label."""

    a: int
    b: int

    @property
    def dimension(self) -> int:
        return self.a - self.b + 1

    def weights(self) -> List[Tuple[int, int]]:
        return [(self.a - j, self.b + j) for j in range(self.dimension)]

    def __str__(self):
        return f"tau({self.a},{self.b})"


@dataclass
class WedgeSpace:
    """Lambda^plus_count p+ (x) Lambda^minus_count p-.

    ``plus_order`` / ``minus_order`` fix which root vector sits at each
    basis position; changing them permutes the basis without changing
    the space.
    """

    plus_count: int
    minus_count: int
    plus_order: Tuple[Label, ...] = P_PLUS_LABELS
    minus_order: Tuple[Label, ...] = P_MINUS_LABELS
    basis: List[WedgeKey] = field(default_factory=list)

    def __post_init__(self):
        if not (0 <= self.plus_count <= 3 and 0 <= self.minus_count <= 3):
            raise InputError(f"wedge degrees must lie in 0..3, got ({self.plus_count}, {self.minus_count})")
        if sorted(self.plus_order) != sorted(P_PLUS_LABELS) or sorted(self.minus_order) != sorted(P_MINUS_LABELS):
            raise InputError("basis orders must permute the p+ and p- root labels")
        self.basis = [
            (plus, minus)
            for plus in combinations(range(3), self.plus_count)
            for minus in combinations(range(3), self.minus_count)
        ]

    @property
    def pattern(self) -> Tuple[int, int]:
        return (self.plus_count, self.minus_count)

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def key(self, plus: Sequence[Label], minus: Sequence[Label]) -> Vec:
        """The wedge of the given root labels as a vector (sign from reordering)."""
        p_pos, p_sign = _sort_sign([self.plus_order.index(lab) for lab in plus])
        m_pos, m_sign = _sort_sign([self.minus_order.index(lab) for lab in minus])
        if p_pos is None or m_pos is None:
            return {}
        if len(p_pos) != self.plus_count or len(m_pos) != self.minus_count:
            raise InputError(f"wedge of shape ({len(p_pos)}, {len(m_pos)}) is not in {self.pattern}")
        return {(p_pos, m_pos): CycScalar.of(p_sign * m_sign)}

    def labels(self, key: WedgeKey) -> Tuple[Tuple[Label, ...], Tuple[Label, ...]]:
        return tuple(self.plus_order[i] for i in key[0]), tuple(self.minus_order[i] for i in key[1])

    def weight(self, key: WedgeKey) -> Tuple[int, int]:
        plus, minus = self.labels(key)
        labs = plus + minus
        return (sum(lab[0] for lab in labs), sum(lab[1] for lab in labs))

    def weight_space(self, w: Tuple[int, int]) -> List[WedgeKey]:
        return [key for key in self.basis if self.weight(key) == w]

    def character(self) -> Dict[Tuple[int, int], int]:
        out: Dict[Tuple[int, int], int] = {}
        for key in self.basis:
            w = self.weight(key)
            out[w] = out.get(w, 0) + 1
        return out

    def act(self, x: LieMatrix, v: Vec) -> Vec:
        """Adjoint action of x in k_C, extended to wedges as a derivation."""
        if not in_k(x):
            raise InputError("only the compact algebra acts on p+ and p- separately")
        plus_images = [_read_p(bracket(x, ROOT_VECTORS[lab]), P_PLUS_LABELS, True) for lab in self.plus_order]
        minus_images = [_read_p(bracket(x, ROOT_VECTORS[lab]), P_MINUS_LABELS, False) for lab in self.minus_order]
        out: Vec = {}
        for key, coeff in v.items():
            plus, minus = self.labels(key)
            for slot, lab in enumerate(plus):
                for target, c in plus_images[self.plus_order.index(lab)].items():
                    new_plus = plus[:slot] + (target,) + plus[slot + 1 :]
                    axpy(out, coeff * c, self.key(new_plus, minus))
            for slot, lab in enumerate(minus):
                for target, c in minus_images[self.minus_order.index(lab)].items():
                    new_minus = minus[:slot] + (target,) + minus[slot + 1 :]
                    axpy(out, coeff * c, self.key(plus, new_minus))
        return out

    def raise_(self, v: Vec) -> Vec:
        return self.act(ROOT_VECTORS[E_LABEL], v)

    def lower(self, v: Vec, times: int = 1) -> Vec:
        for _ in range(times):
            v = self.act(ROOT_VECTORS[F_LABEL], v)
        return v


# ─── Decomposizione ──────────────────────────────────────────────────────────


def peel_character(char: Dict[Tuple[int, int], int]) -> Dict[KType, int]:
    """Split a U(2) character into tau_(a,b) by repeatedly removing the top x - y weight."""
    remaining = {w: m for w, m in char.items() if m}
    out: Dict[KType, int] = {}
    while remaining:
        top = max(remaining, key=lambda w: (w[0] - w[1], w[0]))
        mult = remaining[top]
        if mult < 0:
            raise ConstructionError(f"negative multiplicity at weight {top}")
        tau = KType(top[0], top[1])
        for w in tau.weights():
            left = remaining.get(w, 0) - mult
            if left < 0:
                raise ConstructionError(f"character is not a sum of K-types (weight {w})")
            if left:
                remaining[w] = left
            else:
                remaining.pop(w, None)
        out[tau] = out.get(tau, 0) + mult
    return out


def highest_weight_vectors(space: WedgeSpace, w: Tuple[int, int]) -> List[Vec]:
    """Kernel of X_(1,-1) inside the weight-w space."""
    keys = space.weight_space(w)
    images = [space.raise_({key: ONE}) for key in keys]
    kernel = []
    for rel in relations(images):
        v: Vec = {}
        for idx, c in rel.items():
            axpy(v, c, {keys[idx]: ONE})
        if v:
            kernel.append(v)
    return kernel


@dataclass
class WedgeDecomposition:
    pattern: Tuple[int, int]
    dimension: int
    components: Dict[KType, int]
    highest_vectors: Dict[KType, List[Vec]] = field(default_factory=dict)

    def labels(self) -> List[str]:
        return [str(t) for t in sorted(self.components, key=lambda t: (t.a - t.b, t.a), reverse=True)]


def wedge_decompose(pattern: Tuple[int, int], space: Optional[WedgeSpace] = None) -> WedgeDecomposition:
    """Character peel cross-checked against kernels of X_(1,-1)."""
    if tuple(pattern) not in PATTERNS:
        raise InputError(f"pattern must be one of {PATTERNS}, got {pattern}")
    space = space or WedgeSpace(*pattern)
    components = peel_character(space.character())
    hw: Dict[KType, List[Vec]] = {}
    for tau, mult in components.items():
        vecs = highest_weight_vectors(space, (tau.a, tau.b))
        if len(vecs) != mult:
            raise ConstructionError(f"{tau}: {len(vecs)} highest-weight vectors for multiplicity {mult}")
        hw[tau] = vecs
    total = sum(t.dimension * m for t, m in components.items())
    if total != space.dimension:
        raise ConstructionError(f"K-types cover {total} of {space.dimension} dimensions")
    logger.debug("wedge %s: %s", pattern, {str(t): m for t, m in components.items()})
    return WedgeDecomposition(tuple(pattern), space.dimension, components, hw)


def component_coefficients(
    space: WedgeSpace, v: Vec, tops: Dict[KType, Vec]
) -> Dict[KType, CycScalar]:
    """Write a weight vector v as sum over K-types of c_tau * X_(-1,1)^j (top_tau).

    ``tops`` gives one highest-weight vector per K-type (multiplicity one);
    K-types with no vector at the weight of v get coefficient zero.
    """
    if not v:
        return {tau: ZERO for tau in tops}
    weights = {space.weight(key) for key in v}
    if len(weights) != 1:
        raise InputError("vector is not a compact weight vector")
    w = weights.pop()
    spanning: List[Tuple[KType, Vec]] = []
    for tau, top in tops.items():
        j = tau.a - w[0]
        if 0 <= j < tau.dimension and (tau.b + j) == w[1]:
            image = space.lower(top, j)
            if image:
                spanning.append((tau, image))
    eb = EchelonBasis()
    for _, image in spanning:
        if not eb.add(image):
            raise ConstructionError("K-type components are linearly dependent (rank deficiency)")
    coords = eb.coordinates(v)
    if coords is None:
        raise ConstructionError(f"vector of weight {w} is not spanned by the K-type components")
    out = {tau: ZERO for tau in tops}
    for idx, c in coords.items():
        out[spanning[idx][0]] = c
    return out
