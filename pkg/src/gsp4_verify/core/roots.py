"""
Root datum of GSp(4): weights, the Weyl group, dominance and the
branching law to GL(2) x_GL(1) GL(2).

The branching law is evaluated twice: once through the explicit list of
inequalities and once through an independent character computation
(Weyl character formula, restricted to the common torus, then peeled
into products of GL(2) characters).
"""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterator, List, Tuple

from gsp4_verify.core.algebra import LaurentPoly
from gsp4_verify.core.errors import ConstructionError, InputError

logger = logging.getLogger(__name__)

# Variabili del toro: t1, t2 e il fattore di similitudine nu
TORUS_VARS = ("x1", "x2", "z")

Matrix2 = Tuple[Tuple[int, int], Tuple[int, int]]


# ─── Pesi ────────────────────────────────────────────────────────────────────


@dataclass(frozen=True)
class Weight:
    """Character lambda(k, k', c) of the diagonal torus."""

    k: int
    kp: int
    c: int

    def __post_init__(self):
        if (self.k + self.kp - self.c) % 2:
            raise InputError(f"parity violated: k + k' = {self.k + self.kp} and c = {self.c} differ mod 2")

    @property
    def t(self) -> int:
        """Exponent of the similitude factor, (c - k - k')/2."""
        return (self.c - self.k - self.kp) // 2

    @property
    def is_dominant(self) -> bool:
        return self.k >= self.kp >= 0

    def __str__(self):
        return f"lambda({self.k},{self.kp},{self.c})"


@dataclass(frozen=True)
class CompactWeight:
    """Character lambda'(n, n', c) of the compact torus times the centre."""

    n: int
    np: int
    c: int

    def __post_init__(self):
        if (self.n + self.np - self.c) % 2:
            raise InputError(f"parity violated: n + n' = {self.n + self.np} and c = {self.c} differ mod 2")

    def __str__(self):
        return f"lambda'({self.n},{self.np},{self.c})"


def require_dominant(lam: Weight) -> None:
    if not lam.is_dominant:
        raise InputError(f"{lam} is not dominant (need k >= k' >= 0)")


# ─── Gruppo di Weyl ──────────────────────────────────────────────────────────

_GENERATORS: Dict[str, Matrix2] = {
    "s1": ((0, 1), (1, 0)),
    "s2": ((1, 0), (0, -1)),
}
_IDENTITY: Matrix2 = ((1, 0), (0, 1))


def _matmul(a: Matrix2, b: Matrix2) -> Matrix2:
    return (
        (a[0][0] * b[0][0] + a[0][1] * b[1][0], a[0][0] * b[0][1] + a[0][1] * b[1][1]),
        (a[1][0] * b[0][0] + a[1][1] * b[1][0], a[1][0] * b[0][1] + a[1][1] * b[1][1]),
    )


@dataclass(frozen=True)
class WeylElement:
    """An element of W(C2) stored by a reduced word and its matrix on (k, k')."""

    word: Tuple[str, ...]
    matrix: Matrix2

    @property
    def length(self) -> int:
        return len(self.word)

    @property
    def sign(self) -> int:
        return -1 if self.length % 2 else 1

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        return element_of_matrix(_matmul(self.matrix, other.matrix))

    def __eq__(self, other):
        if not isinstance(other, WeylElement):
            return NotImplemented
        return self.matrix == other.matrix

    def __hash__(self):
        return hash(self.matrix)

    def __str__(self):
        return "*".join(self.word) if self.word else "1"


@lru_cache(maxsize=None)
def weyl_group() -> Tuple[WeylElement, ...]:
    """The eight elements, in BFS order (so words are reduced)."""
    seen: Dict[Matrix2, Tuple[str, ...]] = {_IDENTITY: ()}
    queue = deque([_IDENTITY])
    while queue:
        m = queue.popleft()
        for name in sorted(_GENERATORS):
            nxt = _matmul(m, _GENERATORS[name])
            if nxt not in seen:
                seen[nxt] = seen[m] + (name,)
                queue.append(nxt)
    if len(seen) != 8:
        raise ConstructionError(f"Weyl group generated {len(seen)} elements, expected 8")
    return tuple(WeylElement(word, m) for m, word in seen.items())


def element_of_matrix(m: Matrix2) -> WeylElement:
    for w in weyl_group():
        if w.matrix == m:
            return w
    raise ConstructionError(f"matrix {m} is not in the Weyl group")


def weyl_element(word: Tuple[str, ...]) -> WeylElement:
    """Reduce an arbitrary word in s1, s2 to its group element."""
    m = _IDENTITY
    for name in word:
        if name not in _GENERATORS:
            raise InputError(f"unknown generator {name!r}")
        m = _matmul(m, _GENERATORS[name])
    return element_of_matrix(m)


def weyl_act(w: WeylElement, lam: Weight) -> Weight:
    """Action on lambda(k, k', c); c is fixed."""
    (a, b), (cc, d) = w.matrix
    return Weight(a * lam.k + b * lam.kp, cc * lam.k + d * lam.kp, lam.c)


def weyl_orbit(lam: Weight) -> List[Weight]:
    return sorted({weyl_act(w, lam) for w in weyl_group()}, key=lambda x: (x.k, x.kp), reverse=True)


def contragredient(lam: Weight) -> Weight:
    require_dominant(lam)
    return Weight(lam.k, lam.kp, -lam.c)


# ─── Caratteri ───────────────────────────────────────────────────────────────

RHO = Weight(2, 1, 3)


def _act_exponent(w: WeylElement, exps: Tuple[int, ...]) -> Tuple[int, int, int]:
    a, b, e = exps
    image = weyl_act(w, Weight(a, b, a + b + 2 * e))
    return (image.k, image.kp, image.t)


def _alternant(lam: Weight) -> LaurentPoly:
    terms: Dict[Tuple[int, int, int], int] = {}
    for w in weyl_group():
        image = weyl_act(w, lam)
        key = (image.k, image.kp, image.t)
        terms[key] = terms.get(key, 0) + w.sign
    return LaurentPoly(TORUS_VARS, terms)


@lru_cache(maxsize=256)
def weyl_character(lam: Weight) -> LaurentPoly:
    """Character of V_lambda as a Laurent polynomial in (x1, x2, z)."""
    require_dominant(lam)
    shifted = Weight(lam.k + RHO.k, lam.kp + RHO.kp, lam.c + RHO.c)
    return _alternant(shifted).divide_exact(_alternant(RHO))


def weight_multiplicities(lam: Weight) -> Dict[Tuple[int, int], int]:
    """Multiplicity of each (k, k') weight of V_lambda."""
    return {(e[0], e[1]): int(c.to_fraction()) for e, c in weyl_character(lam).terms.items()}


def weyl_dimension(lam: Weight) -> int:
    require_dominant(lam)
    a, b = lam.k - lam.kp, lam.kp
    return (a + 1) * (b + 1) * (a + b + 2) * (a + 2 * b + 3) // 6


def gl2_pair_character(p: int, q: int) -> LaurentPoly:
    """Character of Sym^p x Sym^q on the common torus, top weight x1^p x2^q."""
    terms = {}
    for j in range(p + 1):
        for ll in range(q + 1):
            terms[(p - 2 * j, q - 2 * ll, j + ll)] = 1
    return LaurentPoly(TORUS_VARS, terms)


@lru_cache(maxsize=256)
def branching_decomposition(lam: Weight) -> Dict[Tuple[int, int], int]:
    """Restriction of V_lambda to GL(2) x_GL(1) GL(2) as {(p, q): multiplicity}."""
    remaining = weyl_character(lam)
    result: Dict[Tuple[int, int], int] = {}
    while remaining:
        (u, up, e), coeff = remaining.leading_term()
        if not coeff.is_rational or coeff.to_fraction() <= 0 or coeff.to_fraction().denominator != 1:
            raise ConstructionError(f"branching peel hit coefficient {coeff} at ({u},{up}) for {lam}")
        if u < 0 or up < 0:
            raise ConstructionError(f"branching peel reached non-dominant weight ({u},{up}) for {lam}")
        mult = int(coeff.to_fraction())
        shift = LaurentPoly.monomial(TORUS_VARS, (0, 0, e), mult)
        remaining = remaining - shift * gl2_pair_character(u, up)
        result[(u, up)] = result.get((u, up), 0) + mult
    logger.debug("branching of %s: %d constituents", lam, len(result))
    return result


# ─── Branching ───────────────────────────────────────────────────────────────


@dataclass(frozen=True)
class BranchQuery:
    """Does (Sym^p x Sym^q)(3) occur in the restriction of V_w?"""

    p: int
    q: int
    w: Weight

    def __post_init__(self):
        if self.p < 0 or self.q < 0:
            raise InputError(f"p and q must be non-negative, got ({self.p}, {self.q})")
        if self.w.c != self.p + self.q + 6:
            raise InputError(f"coefficient weight must have c = p + q + 6 = {self.p + self.q + 6}, got {self.w.c}")

    @classmethod
    def of(cls, p: int, q: int, k: int, kp: int) -> "BranchQuery":
        if (k + kp - p - q) % 2:
            raise InputError(f"parity violated: k + k' = {k + kp} and p + q = {p + q} differ mod 2")
        return cls(p, q, Weight(k, kp, p + q + 6))


def branching_admissible(bq: BranchQuery) -> bool:
    """The five-case inequality list."""
    require_dominant(bq.w)
    p, q, k, kp = bq.p, bq.q, bq.w.k, bq.w.kp
    if p > k:
        return False
    if 0 <= p < kp:
        if p < k - kp:
            return k - kp - p <= q <= k - kp + p
        return p - k + kp <= q <= p + k - kp
    # kp <= p <= k
    if kp < k - p:
        return k - kp - p <= q <= k + kp - p
    return p - k + kp <= q <= k + kp - p


def branching_multiplicity(bq: BranchQuery) -> int:
    require_dominant(bq.w)
    return branching_decomposition(Weight(bq.w.k, bq.w.kp, bq.w.c)).get((bq.p, bq.q), 0)


def dominant_pairs(max_sum: int, min_sum: int = 0) -> Iterator[Tuple[int, int]]:
    """(k, k') with k >= k' >= 0 and min_sum <= k + k' <= max_sum, sorted."""
    for total in range(min_sum, max_sum + 1):
        for kp in range(0, total // 2 + 1):
            yield (total - kp, kp)
