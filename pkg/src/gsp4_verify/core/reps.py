"""
Highest-weight modules of sp(4) built exactly inside the polynomial model
Sym^(k-k') V (x) Sym^k' (Lambda^2 V) of the standard representation V,
together with the U(2) modules tau_(a,b), the bases a_j / b_j of
Sym^n, the Cayley transport v = J w and the isotypic projection used by
the lambda_i(v) scan.

A polynomial-model vector is a sparse dict keyed by (sym_counts, wedge_counts):
sym_counts counts e1..e4, wedge_counts counts the six e_i ^ e_j with i < j.
A module vector is a sparse dict keyed by basis index.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Dict, List, Optional, Sequence, Tuple

from gsp4_verify.core.algebra import I_UNIT, ONE, ZERO, ZETA8, CycScalar
from gsp4_verify.core.errors import ConstructionError, InputError
from gsp4_verify.core.lie import (
    CHEVALLEY,
    LOWERING,
    RAISING,
    ROOT_VECTORS,
    T1,
    T2,
    LieMatrix,
    bracket,
    chevalley_coordinates,
)
from gsp4_verify.core.linalg import EchelonBasis, Vec, axpy, scale
from gsp4_verify.core.roots import BranchQuery, CompactWeight, Weight, branching_admissible, weyl_dimension
from gsp4_verify.models.config import DEFAULT_MAX_DEGREE
from gsp4_verify.models.results import ScanRow

logger = logging.getLogger(__name__)

PAIRS: Tuple[Tuple[int, int], ...] = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))
_PAIR_INDEX = {pair: idx for idx, pair in enumerate(PAIRS)}
# Pesi di e1, e2, e3, e4
BASIS_WEIGHTS: Tuple[Tuple[int, int], ...] = ((1, 0), (0, 1), (-1, 0), (0, -1))

PolyKey = Tuple[Tuple[int, ...], Tuple[int, ...]]

# Signed permutations: column i is sign[i] * e_perm[i]
_N_ACTION = ((1, 0, 3, 2), (-1, -1, 1, 1))


# ─── Modello polinomiale ─────────────────────────────────────────────────────


def _wedge(i: int, j: int) -> Optional[Tuple[int, int]]:
    """(pair index, sign) of e_i ^ e_j, None when i == j."""
    if i == j:
        return None
    if i < j:
        return _PAIR_INDEX[(i, j)], 1
    return _PAIR_INDEX[(j, i)], -1


@dataclass
class _Images:
    """Images of e_i and e_i ^ e_j under one Lie algebra element."""

    std: List[List[Tuple[int, CycScalar]]]
    wedge: List[List[Tuple[int, CycScalar]]]


def _images_of(x: LieMatrix) -> _Images:
    std = [[(row, x[row, col]) for row in range(4) if x[row, col]] for col in range(4)]
    wedge = []
    for i, j in PAIRS:
        acc: Dict[int, CycScalar] = {}
        for l_idx, c in std[i]:
            w = _wedge(l_idx, j)
            if w:
                acc[w[0]] = acc.get(w[0], ZERO) + c * w[1]
        for l_idx, c in std[j]:
            w = _wedge(i, l_idx)
            if w:
                acc[w[0]] = acc.get(w[0], ZERO) + c * w[1]
        wedge.append([(idx, c) for idx, c in acc.items() if c])
    return _Images(std, wedge)


def _bump(counts: Tuple[int, ...], remove: int, add: int) -> Tuple[int, ...]:
    out = list(counts)
    out[remove] -= 1
    out[add] += 1
    return tuple(out)


def poly_act(images: _Images, v: Vec) -> Vec:
    """Derivation action of a Lie algebra element on a polynomial-model vector."""
    out: Vec = {}
    for (sym, wed), coeff in v.items():
        for i, m in enumerate(sym):
            if m:
                for target, c in images.std[i]:
                    axpy(out, coeff * c * m, {(_bump(sym, i, target), wed): ONE})
        for p, m in enumerate(wed):
            if m:
                for target, c in images.wedge[p]:
                    axpy(out, coeff * c * m, {(sym, _bump(wed, p, target)): ONE})
    return out


def poly_weight(key: PolyKey) -> Tuple[int, int]:
    sym, wed = key
    u = sum(m * BASIS_WEIGHTS[i][0] for i, m in enumerate(sym))
    up = sum(m * BASIS_WEIGHTS[i][1] for i, m in enumerate(sym))
    for p, m in enumerate(wed):
        i, j = PAIRS[p]
        u += m * (BASIS_WEIGHTS[i][0] + BASIS_WEIGHTS[j][0])
        up += m * (BASIS_WEIGHTS[i][1] + BASIS_WEIGHTS[j][1])
    return (u, up)


def poly_signed_permutation(action: Tuple[Tuple[int, ...], Tuple[int, ...]], v: Vec) -> Vec:
    """Group action of a signed permutation matrix on the polynomial model."""
    perm, signs = action
    out: Vec = {}
    for (sym, wed), coeff in v.items():
        sign = 1
        new_sym = [0] * 4
        for i, m in enumerate(sym):
            if m:
                new_sym[perm[i]] += m
                sign *= signs[i] ** m
        new_wed = [0] * 6
        for p, m in enumerate(wed):
            if m:
                i, j = PAIRS[p]
                idx, s = _wedge(perm[i], perm[j])
                new_wed[idx] += m
                sign *= (s * signs[i] * signs[j]) ** m
        axpy(out, coeff * sign, {(tuple(new_sym), tuple(new_wed)): ONE})
    return out


def highest_weight_key(k: int, kp: int) -> PolyKey:
    """e1^(k-k') (e1 ^ e2)^k'."""
    return ((k - kp, 0, 0, 0), (kp, 0, 0, 0, 0, 0))


# ─── Seme letterale in r^(x)n ────────────────────────────────────────────────


def tensor_seed(k: int, kp: int) -> Dict[Tuple[int, ...], CycScalar]:
    """e1^(x)(k-k') (x) (e1 (x) e2 - e2 (x) e1)^(x)k' as a sparse tensor."""
    terms: Dict[Tuple[int, ...], CycScalar] = {tuple([0] * (k - kp)): ONE}
    for _ in range(kp):
        nxt: Dict[Tuple[int, ...], CycScalar] = {}
        for idx, c in terms.items():
            nxt[idx + (0, 1)] = c
            nxt[idx + (1, 0)] = -c
        terms = nxt
    return terms


def tensor_act(x: LieMatrix, t: Dict[Tuple[int, ...], CycScalar]) -> Dict[Tuple[int, ...], CycScalar]:
    out: Dict[Tuple[int, ...], CycScalar] = {}
    for idx, c in t.items():
        for pos, i in enumerate(idx):
            for row in range(4):
                entry = x[row, i]
                if entry:
                    axpy(out, c * entry, {idx[:pos] + (row,) + idx[pos + 1 :]: ONE})
    return out


def seed_is_highest_weight(k: int, kp: int) -> bool:
    """Both raising operators kill the literal tensor seed."""
    seed = tensor_seed(k, kp)
    return all(not tensor_act(CHEVALLEY[name], seed) for name in RAISING)


# ─── RepModule ───────────────────────────────────────────────────────────────


@dataclass
class RepModule:
    """Irreducible sp(4)-module of highest weight lambda(k, k', c).

    ``basis`` holds polynomial-model vectors; ``operators`` maps each
    Chevalley label to its matrix in the module basis (column index ->
    sparse image).
    """

    highest_weight: Weight
    basis: List[Vec]
    weight_of: List[Tuple[int, int]]
    operators: Dict[str, Dict[int, Vec]] = field(default_factory=dict)
    _pivots: List[PolyKey] = field(default_factory=list, repr=False)
    _op_cache: Dict[LieMatrix, Dict[int, Vec]] = field(default_factory=dict, repr=False)

    @property
    def dimension(self) -> int:
        return len(self.basis)

    @property
    def degree(self) -> int:
        return self.highest_weight.k + self.highest_weight.kp

    def weight_space(self, u: int, up: int) -> List[int]:
        return [i for i, w in enumerate(self.weight_of) if w == (u, up)]

    def weight_multiplicities(self) -> Dict[Tuple[int, int], int]:
        out: Dict[Tuple[int, int], int] = {}
        for w in self.weight_of:
            out[w] = out.get(w, 0) + 1
        return out

    def to_poly(self, v: Vec) -> Vec:
        out: Vec = {}
        for idx, c in v.items():
            axpy(out, c, self.basis[idx])
        return out

    def from_poly(self, pv: Vec) -> Vec:
        """Module coordinates of a polynomial-model vector lying in the module."""
        coords = {i: pv[key] for i, key in enumerate(self._pivots) if key in pv}
        residual = dict(pv)
        for i, c in coords.items():
            axpy(residual, -c, self.basis[i])
        if residual:
            raise ConstructionError(f"vector leaves the module {self.highest_weight}")
        return coords

    def operator(self, x) -> Dict[int, Vec]:
        """Matrix of a Chevalley label or of any complexified sp(4) element."""
        if isinstance(x, str):
            return self.operators[x]
        cached = self._op_cache.get(x)
        if cached is not None:
            return cached
        coords = chevalley_coordinates(x)
        op: Dict[int, Vec] = {}
        for j in range(self.dimension):
            col: Vec = {}
            for name, c in coords.items():
                axpy(col, c, self.operators[name].get(j, {}))
            if col:
                op[j] = col
        self._op_cache[x] = op
        return op

    def act(self, x, v: Vec) -> Vec:
        op = self.operator(x)
        out: Vec = {}
        for j, c in v.items():
            col = op.get(j)
            if col:
                axpy(out, c, col)
        return out

    def act_signed_permutation(self, action, v: Vec, nu: int = 1) -> Vec:
        """Group action of a signed permutation with similitude nu, twist included."""
        if nu not in (1, -1):
            raise InputError(f"only similitude +-1 is supported, got {nu}")
        # fattore nu^((c - n)/2) del twist centrale
        twist = -1 if nu == -1 and ((self.highest_weight.c - self.degree) // 2) % 2 else 1
        image = poly_signed_permutation(action, self.to_poly(v))
        return scale(self.from_poly(image), twist)

    def compact_eigenvalues(self, v: Vec) -> Optional[Tuple[CycScalar, CycScalar]]:
        """(mu1, mu2) with dT1 v = mu1 v and dT2 v = mu2 v, or None."""
        out = []
        pivot = max(v)
        for t in (T1, T2):
            image = self.act(t, v)
            mu = image.get(pivot, ZERO) / v[pivot]
            if scale(v, mu) != image:
                return None
            out.append(mu)
        return out[0], out[1]


def _validate_lambda(lam: Weight, max_degree: int) -> None:
    if not lam.is_dominant:
        raise InputError(f"{lam} is not dominant (need k >= k' >= 0)")
    if lam.k + lam.kp > max_degree:
        raise InputError(f"k + k' = {lam.k + lam.kp} exceeds the configured bound {max_degree}")


@lru_cache(maxsize=32)
def build_irrep(lam: Weight, max_degree: int = DEFAULT_MAX_DEGREE) -> RepModule:
    """Cyclic span of the highest-weight vector under the lowering operators."""
    _validate_lambda(lam, max_degree)
    k, kp = lam.k, lam.kp
    if not seed_is_highest_weight(k, kp):
        raise ConstructionError(f"tensor seed for {lam} is not annihilated by the raising operators")

    lowering = [_images_of(CHEVALLEY[name]) for name in LOWERING]
    raising = [_images_of(CHEVALLEY[name]) for name in RAISING]
    hw: Vec = {highest_weight_key(k, kp): ONE}
    if any(poly_act(img, hw) for img in raising):
        raise ConstructionError(f"highest-weight vector of {lam} is not killed by the raising operators")

    spaces: Dict[Tuple[int, int], EchelonBasis] = {}
    queue: List[Vec] = [hw]
    spaces[(k, kp)] = EchelonBasis()
    spaces[(k, kp)].add(hw)
    while queue:
        current = queue.pop()
        for img in lowering:
            image = poly_act(img, current)
            if not image:
                continue
            w = poly_weight(next(iter(image)))
            space = spaces.setdefault(w, EchelonBasis())
            if space.add(image):
                queue.append(image)

    basis: List[Vec] = []
    weights: List[Tuple[int, int]] = []
    pivots: List[PolyKey] = []
    for w in sorted(spaces, reverse=True):
        eb = spaces[w]
        for pivot in sorted(eb.rows, reverse=True):
            basis.append(eb.rows[pivot])
            weights.append(w)
            pivots.append(pivot)

    expected = weyl_dimension(lam)
    if len(basis) != expected:
        raise ConstructionError(f"{lam}: built dimension {len(basis)} but Weyl dimension {expected}")

    module = RepModule(lam, basis, weights, _pivots=pivots)
    for name, x in CHEVALLEY.items():
        images = _images_of(x)
        op: Dict[int, Vec] = {}
        for j, bv in enumerate(basis):
            col = module.from_poly(poly_act(images, bv))
            if col:
                op[j] = col
        module.operators[name] = op
    logger.info("built %s: dimension %d", lam, module.dimension)
    return module


def check_brackets(module: RepModule, names: Optional[Sequence[str]] = None) -> bool:
    """[rho(X), rho(Y)] = rho([X, Y]) on every basis vector."""
    names = list(names or CHEVALLEY)
    for a_idx, a in enumerate(names):
        for b in names[a_idx + 1 :]:
            xy = bracket(CHEVALLEY[a], CHEVALLEY[b])
            for j in range(module.dimension):
                e_j = {j: ONE}
                lhs = dict(module.act(a, module.act(b, e_j)))
                axpy(lhs, -1, module.act(b, module.act(a, e_j)))
                if lhs != module.act(xy, e_j):
                    logger.warning("bracket [%s, %s] fails on basis vector %d", a, b, j)
                    return False
    return True


# ─── Trasporto di Cayley ─────────────────────────────────────────────────────

_M_ELEMENT = CHEVALLEY["2e1"] + CHEVALLEY["2e2"] + CHEVALLEY["-2e1"] + CHEVALLEY["-2e2"]


def _newton_coefficients(nodes: Sequence[int], values: Sequence[CycScalar]) -> List[CycScalar]:
    coeffs = list(values)
    n = len(nodes)
    for level in range(1, n):
        for i in range(n - 1, level - 1, -1):
            coeffs[i] = (coeffs[i] - coeffs[i - 1]) / (nodes[i] - nodes[i - level])
    return coeffs


def apply_J(module: RepModule, w: Vec) -> Vec:  # noqa: N802
    """rho(J) w with J = exp(i pi/4 M): sum over eigenvalues mu of dM of zeta8^mu times the mu-projection."""
    n = module.degree
    nodes = list(range(-n, n + 1, 2))
    coeffs = _newton_coefficients(nodes, [ZETA8**mu for mu in nodes])
    acc = scale(w, coeffs[-1])
    for j in range(len(nodes) - 2, -1, -1):
        shifted = module.act(_M_ELEMENT, acc)
        axpy(shifted, -nodes[j], acc)
        axpy(shifted, coeffs[j], w)
        acc = shifted
    return acc


@dataclass
class CayleyVector:
    vector: Vec
    compact_weight: CompactWeight


def _single_weight(module: RepModule, w: Vec) -> Tuple[int, int]:
    weights = {module.weight_of[i] for i in w}
    if len(weights) != 1:
        raise InputError("input is not a weight vector for the diagonal torus")
    return weights.pop()


def cayley_vector(module: RepModule, w) -> CayleyVector:
    """v = J w; checks that v has compact weight lambda'(u, u', c)."""
    if isinstance(w, int):
        w = {w: ONE}
    if not w:
        raise InputError("zero vector has no weight")
    u, up = _single_weight(module, w)
    v = apply_J(module, w)
    eig = module.compact_eigenvalues(v)
    if eig != (I_UNIT * u, I_UNIT * up):
        raise ConstructionError(f"J-transport of a weight ({u},{up}) vector has eigenvalues {eig}")
    return CayleyVector(v, CompactWeight(u, up, module.highest_weight.c))


def apply_N(module: RepModule, v: Vec) -> Vec:  # noqa: N802
    return module.act_signed_permutation(_N_ACTION, v, nu=-1)


def compact_weight_of(module: RepModule, v: Vec) -> Optional[CompactWeight]:
    eig = module.compact_eigenvalues(v)
    if eig is None:
        return None
    u, up = (e / I_UNIT for e in eig)
    return CompactWeight(int(u.to_fraction()), int(up.to_fraction()), module.highest_weight.c)


# ─── Proiezione isotipica ────────────────────────────────────────────────────

_SL2_FACTORS = (("h1", "2e1", "-2e1"), ("h2", "2e2", "-2e2"))


def _casimir(module: RepModule, factor: int, v: Vec) -> Vec:
    h, e, f = _SL2_FACTORS[factor]
    out = module.act(h, module.act(h, v))
    axpy(out, 2, module.act(e, module.act(f, v)))
    axpy(out, 2, module.act(f, module.act(e, v)))
    return out


def _eigen_project(module: RepModule, factor: int, m: int, top: int, v: Vec) -> Vec:
    target = m * (m + 2)
    out = dict(v)
    for other in range(top + 1):
        if other == m or not out:
            continue
        ev = other * (other + 2)
        image = _casimir(module, factor, out)
        axpy(image, -ev, out)
        out = scale(image, Fraction(1, target - ev))
    return out


@dataclass
class IsotypicProjection:
    vector: Vec
    admissible: bool

    @property
    def is_zero(self) -> bool:
        return not self.vector


def isotypic_project(module: RepModule, p: int, q: int, v: Vec) -> IsotypicProjection:
    """Projection onto the (Sym^p x Sym^q)-isotypic part for gl2 x gl2."""
    lam = module.highest_weight
    if (lam.k + lam.kp - p - q) % 2 or not branching_admissible(BranchQuery.of(p, q, lam.k, lam.kp)):
        return IsotypicProjection({}, False)
    top = lam.k
    out = _eigen_project(module, 0, p, top, v)
    out = _eigen_project(module, 1, q, top, out)
    return IsotypicProjection(out, True)


# ─── Scansione lambda_i(v) ───────────────────────────────────────────────────


def matched_pair(k: int, kp: int, p: int, q: int, i: int) -> Optional[Tuple[int, int]]:
    """Weight-matched basis indices (r_i, s_i), None when non-integral or out of range."""
    r2, s2 = p + k - i, q - kp + i
    if r2 % 2 or s2 % 2:
        return None
    r, s = r2 // 2, s2 // 2
    if not (0 <= r <= p and 0 <= s <= q):
        return None
    return (r, s)


def scan_vector(k: int, kp: int, p: int, q: int, max_degree: int = DEFAULT_MAX_DEGREE) -> Tuple[RepModule, Vec]:
    """Module for lambda(k, k', -p-q) and v = J w for w of weight (-k, k')."""
    module = build_irrep(Weight(k, kp, -p - q), max_degree)
    space = module.weight_space(-k, kp)
    if len(space) != 1:
        raise ConstructionError(f"weight (-{k},{kp}) space has dimension {len(space)}")
    return module, cayley_vector(module, space[0]).vector


def first_coordinate(v: Vec) -> CycScalar:
    return v[min(v)] if v else ZERO


def lambda_scan(
    k: int,
    kp: int,
    i_range: Sequence[int] = (1,),
    p: Optional[int] = None,
    q: Optional[int] = None,
    max_degree: int = DEFAULT_MAX_DEGREE,
) -> List[ScanRow]:
    """Isotypic component of X_(1,-1)^i v for each i, with its weight-matched index pair.

    The reported scalar is the first non-zero coordinate of the projection;
    only its vanishing is independent of the chosen copy.
    """
    p = k - 1 if p is None else p
    q = kp - 1 if q is None else q
    wanted = sorted(set(i_range))
    if not wanted or wanted[0] < 0:
        raise InputError(f"i range must be non-empty and non-negative, got {list(i_range)}")

    module, current = scan_vector(k, kp, p, q, max_degree)
    x = ROOT_VECTORS[(1, -1)]
    rows: List[ScanRow] = []
    for i in range(wanted[-1] + 1):
        if i > 0:
            current = module.act(x, current)
        if i not in wanted:
            continue
        projection = isotypic_project(module, p, q, current)
        rows.append(
            ScanRow(i, matched_pair(k, kp, p, q, i), first_coordinate(projection.vector), not projection.is_zero)
        )
    logger.debug("lambda scan (%d, %d) p=%d q=%d: %s", k, kp, p, q, [(r.i, r.nonzero) for r in rows])
    return rows


# ─── K-tipi di U(2) ──────────────────────────────────────────────────────────


@dataclass(frozen=True)
class KTypeModule:
    """tau_(a,b) with standard basis v_0..v_d, d = a - b."""

    a: int
    b: int

    def __post_init__(self):
        if self.a < self.b:
            raise InputError(f"K-type needs a >= b, got ({self.a}, {self.b})")

    @property
    def d(self) -> int:
        return self.a - self.b

    @property
    def dimension(self) -> int:
        return self.d + 1

    def weight(self, s: int) -> Tuple[int, int]:
        return (s + self.b, self.a - s)

    def raise_(self, v: Dict[int, Fraction]) -> Dict[int, Fraction]:
        """X_(1,-1) v_s = (s+1) v_(s+1)."""
        out: Dict[int, Fraction] = {}
        for s, c in v.items():
            if s < self.d:
                out[s + 1] = out.get(s + 1, Fraction(0)) + c * (s + 1)
        return {s: c for s, c in out.items() if c}

    def lower(self, v: Dict[int, Fraction]) -> Dict[int, Fraction]:
        """X_(-1,1) v_s = (d-s+1) v_(s-1)."""
        out: Dict[int, Fraction] = {}
        for s, c in v.items():
            if s > 0:
                out[s - 1] = out.get(s - 1, Fraction(0)) + c * (self.d - s + 1)
        return {s: c for s, c in out.items() if c}


def lowering_power(m: KTypeModule, i: int) -> Dict[int, Fraction]:
    """X_(1,-1)^i v_0 by iterated action."""
    if not 0 <= i <= m.d:
        raise InputError(f"power {i} outside 0..{m.d}")
    v = {0: Fraction(1)}
    for _ in range(i):
        v = m.raise_(v)
    return v


def raise_lower_coefficient(d: int, m: int, n: int) -> Fraction:
    """n!/(n-m)! (d-n+m)!/(d-n)!."""
    return Fraction(factorial(n), factorial(n - m)) * Fraction(factorial(d - n + m), factorial(d - n))


def raise_lower_identity(module: KTypeModule, m: int, n: int) -> bool:
    if not 0 <= m <= n <= module.d:
        raise InputError(f"need 0 <= m <= n <= {module.d}, got m={m}, n={n}")
    lhs = lowering_power(module, n)
    for _ in range(m):
        lhs = module.lower(lhs)
    rhs = lowering_power(module, n - m)
    coeff = raise_lower_coefficient(module.d, m, n)
    return lhs == {s: c * coeff for s, c in rhs.items()}


# ─── Basi a_j, b_j di Sym^n ──────────────────────────────────────────────────


def _poly_mul(f: Dict[int, CycScalar], g: Dict[int, CycScalar]) -> Dict[int, CycScalar]:
    # keyed by the power of Y
    out: Dict[int, CycScalar] = {}
    for i, a in f.items():
        for j, b in g.items():
            out[i + j] = out.get(i + j, ZERO) + a * b
    return {k: c for k, c in out.items() if c}


def _solve(matrix: List[List[CycScalar]]) -> List[List[CycScalar]]:
    n = len(matrix)
    m = [list(row) + [ONE if i == j else ZERO for j in range(n)] for i, row in enumerate(matrix)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col]), None)
        if pivot is None:
            raise ConstructionError("b_j change of basis is singular")
        m[col], m[pivot] = m[pivot], m[col]
        inv = m[col][col].inverse()
        m[col] = [x * inv for x in m[col]]
        for r in range(n):
            if r != col and m[r][col]:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return [row[n:] for row in m]


@dataclass
class SymBasis:
    """b_j = (iX - Y)^j (iX + Y)^(n-j) in Sym^n and the dual basis a_j.

    Coordinates are over the monomials X^(n-l) Y^l (l = 0..n) for b_j and
    over the dual monomials for a_j.
    """

    n: int
    b: List[Dict[int, CycScalar]] = field(default_factory=list)
    a: List[Dict[int, CycScalar]] = field(default_factory=list)

    @classmethod
    def build(cls, n: int) -> "SymBasis":
        if n < 0:
            raise InputError(f"n must be non-negative, got {n}")
        minus = {0: I_UNIT, 1: CycScalar.of(-1)}
        plus = {0: I_UNIT, 1: ONE}
        b_vecs = []
        for j in range(n + 1):
            f = {0: ONE}
            for _ in range(j):
                f = _poly_mul(f, minus)
            for _ in range(n - j):
                f = _poly_mul(f, plus)
            b_vecs.append(f)
        # colonna j = coordinate di b_j
        matrix = [[b_vecs[j].get(row, ZERO) for j in range(n + 1)] for row in range(n + 1)]
        inv = _solve(matrix)
        a_vecs = [{col: inv[j][col] for col in range(n + 1) if inv[j][col]} for j in range(n + 1)]
        return cls(n, b_vecs, a_vecs)

    def pairing(self, j: int, i: int) -> CycScalar:
        """a_j(b_i); the identity matrix by construction."""
        return sum((c * self.b[i].get(col, ZERO) for col, c in self.a[j].items()), ZERO)

    def b_weight(self, j: int) -> int:
        """Compact weight of b_j under T = [[0, 1], [-1, 0]]: eigenvalue i(2j - n)."""
        v = self.b[j]
        image: Dict[int, CycScalar] = {}
        # T acts by the derivation X -> -Y, Y -> X
        for row, c in v.items():
            x_pow, y_pow = self.n - row, row
            if x_pow:
                image[row + 1] = image.get(row + 1, ZERO) - c * x_pow
            if y_pow:
                image[row - 1] = image.get(row - 1, ZERO) + c * y_pow
        pivot = max(v)
        mu = image.get(pivot, ZERO) / v[pivot]
        if any(image.get(r, ZERO) != mu * v.get(r, ZERO) for r in set(image) | set(v)):
            raise ConstructionError(f"b_{j} is not a weight vector")
        return int((mu / I_UNIT).to_fraction())

    def a_weight(self, j: int) -> CompactWeight:
        """a_j is dual to b_j, so its weight is the negative: lambda'(n - 2j, -n)."""
        return CompactWeight(-self.b_weight(j), -self.n, 0)

    def conjugate_a(self, j: int) -> Dict[int, CycScalar]:
        return {col: c.conjugate() for col, c in self.a[j].items()}

    def conjugation_partner(self, j: int) -> Tuple[int, int]:
        """(sign, index) with conj(a_j) = sign * a_index."""
        conj = self.conjugate_a(j)
        for idx in range(self.n + 1):
            for sign in (1, -1):
                if conj == {col: c * sign for col, c in self.a[idx].items()}:
                    return sign, idx
        raise ConstructionError(f"conjugate of a_{j} is not a signed basis vector")
