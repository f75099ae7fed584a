"""
Explicit 4x4 matrices for gsp(4): the symplectic form, the compact
Cartan, root vectors, the Cartan decomposition k + p+ + p-, the Cayley
element J, the element N and the embedding of gl(2) x_gl(1) gl(2).

Indices are 0-based in code. The symplectic form is psi = [[0, 1], [-1, 0]]
in 2x2 blocks, so the algebra consists of [[A, B], [C, -A^t]] with B, C
symmetric.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Mapping, Sequence, Tuple, Union

from gsp4_verify.core.algebra import I_UNIT, ONE, ZERO, CycScalar, ScalarLike
from gsp4_verify.core.errors import InputError

logger = logging.getLogger(__name__)

Label = Tuple[int, int]


@dataclass(frozen=True)
class LieMatrix:
    """4x4 matrix over Q(i, sqrt2); used for group and algebra elements alike."""

    rows: Tuple[Tuple[CycScalar, ...], ...]

    @classmethod
    def of(cls, rows: Sequence[Sequence[ScalarLike]]) -> "LieMatrix":
        data = tuple(tuple(CycScalar.of(x) for x in row) for row in rows)
        if len(data) != 4 or any(len(r) != 4 for r in data):
            raise InputError("LieMatrix must be 4x4")
        return cls(data)

    @classmethod
    def zero(cls) -> "LieMatrix":
        return cls(tuple((ZERO,) * 4 for _ in range(4)))

    @classmethod
    def identity(cls) -> "LieMatrix":
        return cls(tuple(tuple(ONE if i == j else ZERO for j in range(4)) for i in range(4)))

    @classmethod
    def unit(cls, i: int, j: int, coeff: ScalarLike = 1) -> "LieMatrix":
        c = CycScalar.of(coeff)
        return cls(tuple(tuple(c if (a, b) == (i, j) else ZERO for b in range(4)) for a in range(4)))

    @classmethod
    def from_blocks(cls, a, b, c, d) -> "LieMatrix":
        """Assemble from four 2x2 blocks (nested sequences)."""
        rows = []
        for top, bottom in ((a, b), (c, d)):
            for r in range(2):
                rows.append([top[r][0], top[r][1], bottom[r][0], bottom[r][1]])
        return cls.of(rows)

    def __getitem__(self, ij: Tuple[int, int]) -> CycScalar:
        i, j = ij
        return self.rows[i][j]

    def block(self, bi: int, bj: int) -> Tuple[Tuple[CycScalar, CycScalar], Tuple[CycScalar, CycScalar]]:
        r0, c0 = 2 * bi, 2 * bj
        return (
            (self.rows[r0][c0], self.rows[r0][c0 + 1]),
            (self.rows[r0 + 1][c0], self.rows[r0 + 1][c0 + 1]),
        )

    def __add__(self, other: "LieMatrix") -> "LieMatrix":
        return LieMatrix(tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)))

    def __neg__(self) -> "LieMatrix":
        return LieMatrix(tuple(tuple(-a for a in r) for r in self.rows))

    def __sub__(self, other: "LieMatrix") -> "LieMatrix":
        return self + (-other)

    def __mul__(self, c) -> "LieMatrix":
        if not isinstance(c, (int, Fraction, CycScalar)):
            return NotImplemented
        c = CycScalar.of(c)
        return LieMatrix(tuple(tuple(a * c for a in r) for r in self.rows))

    __rmul__ = __mul__

    def __matmul__(self, other: "LieMatrix") -> "LieMatrix":
        cols = list(zip(*other.rows))
        out = []
        for r in self.rows:
            row = []
            for col in cols:
                acc = ZERO
                for a, b in zip(r, col):
                    if a and b:
                        acc = acc + a * b
                row.append(acc)
            out.append(tuple(row))
        return LieMatrix(tuple(out))

    def transpose(self) -> "LieMatrix":
        return LieMatrix(tuple(zip(*self.rows)))

    def conjugate(self) -> "LieMatrix":
        return LieMatrix(tuple(tuple(a.conjugate() for a in r) for r in self.rows))

    def is_zero(self) -> bool:
        return not any(a for r in self.rows for a in r)

    def apply(self, v: Sequence[ScalarLike]) -> Tuple[CycScalar, ...]:
        """Matrix times column vector."""
        vals = [CycScalar.of(x) for x in v]
        return tuple(sum((a * b for a, b in zip(r, vals)), ZERO) for r in self.rows)

    def inverse(self) -> "LieMatrix":
        """Gauss-Jordan inverse; singular input raises InputError."""
        m = [list(r) + [ONE if i == j else ZERO for j in range(4)] for i, r in enumerate(self.rows)]
        for col in range(4):
            pivot = next((r for r in range(col, 4) if m[r][col]), None)
            if pivot is None:
                raise InputError("matrix is singular")
            m[col], m[pivot] = m[pivot], m[col]
            inv = m[col][col].inverse()
            m[col] = [x * inv for x in m[col]]
            for r in range(4):
                if r != col and m[r][col]:
                    f = m[r][col]
                    m[r] = [x - f * y for x, y in zip(m[r], m[col])]
        return LieMatrix(tuple(tuple(row[4:]) for row in m))

    def __str__(self):
        return "\n".join("[" + ", ".join(str(a) for a in r) + "]" for r in self.rows)


def bracket(x: LieMatrix, y: LieMatrix) -> LieMatrix:
    return x @ y - y @ x


def E(i: int, j: int) -> LieMatrix:  # noqa: N802
    return LieMatrix.unit(i, j)


# ─── Forma simplettica e membership ──────────────────────────────────────────

PSI = LieMatrix.from_blocks([[0, 0], [0, 0]], [[1, 0], [0, 1]], [[-1, 0], [0, -1]], [[0, 0], [0, 0]])


def _similitude_defect(x: LieMatrix) -> LieMatrix:
    return x.transpose() @ PSI + PSI @ x


def in_sp4(x: LieMatrix) -> bool:
    """t(X) psi + psi X = 0."""
    return _similitude_defect(x).is_zero()


def in_gsp4_algebra(x: LieMatrix) -> bool:
    """Membership up to the similitude line: t(X) psi + psi X is a multiple of psi."""
    d = _similitude_defect(x)
    mu = d[0, 2]
    return (d - PSI * mu).is_zero()


def similitude(g: LieMatrix) -> CycScalar:
    """nu(g) with t(g) psi g = nu psi; InputError outside GSp(4)."""
    d = g.transpose() @ PSI @ g
    nu = d[0, 2]
    if not nu or not (d - PSI * nu).is_zero():
        raise InputError("matrix is not a symplectic similitude")
    return nu


# ─── Base di Chevalley ───────────────────────────────────────────────────────

CHEVALLEY: Dict[str, LieMatrix] = {
    "h1": E(0, 0) - E(2, 2),
    "h2": E(1, 1) - E(3, 3),
    "e1-e2": E(0, 1) - E(3, 2),
    "-e1+e2": E(1, 0) - E(2, 3),
    "2e2": E(1, 3),
    "-2e2": E(3, 1),
    "2e1": E(0, 2),
    "-2e1": E(2, 0),
    "e1+e2": E(0, 3) + E(1, 2),
    "-e1-e2": E(3, 0) + E(2, 1),
}

# Posizione da cui si legge la coordinata di ciascun elemento
_READ_OFF: Dict[str, Tuple[int, int]] = {
    "h1": (0, 0),
    "h2": (1, 1),
    "e1-e2": (0, 1),
    "-e1+e2": (1, 0),
    "2e2": (1, 3),
    "-2e2": (3, 1),
    "2e1": (0, 2),
    "-2e1": (2, 0),
    "e1+e2": (0, 3),
    "-e1-e2": (3, 0),
}

RAISING = ("e1-e2", "2e2")
LOWERING = ("-e1+e2", "-2e2")


def chevalley_coordinates(x: LieMatrix) -> Dict[str, CycScalar]:
    """Coordinates of x in the Chevalley basis; InputError outside sp(4)."""
    coords = {name: x[pos] for name, pos in _READ_OFF.items()}
    rebuilt = LieMatrix.zero()
    for name, c in coords.items():
        if c:
            rebuilt = rebuilt + CHEVALLEY[name] * c
    if rebuilt != x:
        raise InputError("matrix is not in the complexified symplectic algebra")
    return {name: c for name, c in coords.items() if c}


# ─── Cartan compatto e vettori radice ────────────────────────────────────────

T1 = E(0, 2) - E(2, 0)
T2 = E(1, 3) - E(3, 1)


def torus_element(x: ScalarLike, y: ScalarLike, xp: ScalarLike, yp: ScalarLike) -> LieMatrix:
    """Block rotation with parameters (x, y) on (e1, e3) and (x', y') on (e2, e4)."""
    x, y, xp, yp = (CycScalar.of(v) for v in (x, y, xp, yp))
    return LieMatrix.of([[x, 0, y, 0], [0, xp, 0, yp], [-y, 0, x, 0], [0, -yp, 0, xp]])


def in_cartan(x: LieMatrix) -> bool:
    a, b = x[0, 2], x[1, 3]
    return x == T1 * a + T2 * b


def _p_matrix(z, sign: int) -> LieMatrix:
    iz = [[I_UNIT * sign * CycScalar.of(v) for v in row] for row in z]
    neg = [[-CycScalar.of(v) for v in row] for row in z]
    return LieMatrix.from_blocks(z, iz, iz, neg)


def p_plus(z) -> LieMatrix:
    """p+(Z) = [[Z, iZ], [iZ, -Z]] for symmetric 2x2 Z."""
    return _p_matrix(z, 1)


def p_minus(z) -> LieMatrix:
    return _p_matrix(z, -1)


def _re_im(m):
    half = Fraction(1, 2)
    re = [[(a + a.conjugate()) * half for a in row] for row in m]
    im = [[(a - a.conjugate()) * half / I_UNIT for a in row] for row in m]
    return re, im


def dkappa(g: Sequence[Sequence[ScalarLike]]) -> LieMatrix:
    """Complexified differential of U(2) -> Sp(4, R), A + iB -> [[A, B], [-B, A]]."""
    g = [[CycScalar.of(v) for v in row] for row in g]
    gh = [[g[j][i].conjugate() for j in range(2)] for i in range(2)]
    half = Fraction(1, 2)
    u = [[(g[i][j] - gh[i][j]) * half for j in range(2)] for i in range(2)]
    v = [[(g[i][j] + gh[i][j]) * half / I_UNIT for j in range(2)] for i in range(2)]

    def real_form(m):
        a, b = _re_im(m)
        neg_b = [[-x for x in row] for row in b]
        return LieMatrix.from_blocks(a, b, neg_b, a)

    return real_form(u) + real_form(v) * I_UNIT


ROOT_VECTORS: Dict[Label, LieMatrix] = {
    (2, 0): p_plus([[1, 0], [0, 0]]),
    (1, 1): p_plus([[0, 1], [1, 0]]),
    (0, 2): p_plus([[0, 0], [0, 1]]),
    (-2, 0): p_minus([[1, 0], [0, 0]]),
    (-1, -1): p_minus([[0, 1], [1, 0]]),
    (0, -2): p_minus([[0, 0], [0, 1]]),
    (1, -1): dkappa([[0, 1], [0, 0]]),
    (-1, 1): dkappa([[0, 0], [1, 0]]),
}

NONCOMPACT_LABELS: Tuple[Label, ...] = ((2, 0), (1, 1), (0, 2), (-2, 0), (-1, -1), (0, -2))
P_PLUS_LABELS: Tuple[Label, ...] = ((2, 0), (1, 1), (0, 2))
P_MINUS_LABELS: Tuple[Label, ...] = ((-2, 0), (-1, -1), (0, -2))


@dataclass(frozen=True)
class NcRootVector:
    label: Label
    matrix: LieMatrix


def nc_root_vectors() -> Tuple[NcRootVector, ...]:
    return tuple(NcRootVector(label, ROOT_VECTORS[label]) for label in NONCOMPACT_LABELS)


def root_value(label: Label, a: ScalarLike, b: ScalarLike) -> CycScalar:
    """(a_1 e1 + a_2 e2)(a T1 + b T2) = i (a_1 a + a_2 b)."""
    return I_UNIT * (CycScalar.of(a) * label[0] + CycScalar.of(b) * label[1])


def root_eigen_holds(label: Label, a: ScalarLike = 1, b: ScalarLike = 0) -> bool:
    h = T1 * a + T2 * b
    x = ROOT_VECTORS[label]
    return bracket(h, x) == x * root_value(label, a, b)


# ─── J, N e coniugio ─────────────────────────────────────────────────────────

_M = LieMatrix.from_blocks([[0, 0], [0, 0]], [[1, 0], [0, 1]], [[1, 0], [0, 1]], [[0, 0], [0, 0]])
_INV_SQRT2 = CycScalar(0, 0, Fraction(1, 2))

J = (LieMatrix.identity() + _M * I_UNIT) * _INV_SQRT2
J_INV = (LieMatrix.identity() - _M * I_UNIT) * _INV_SQRT2

N = LieMatrix.of([[0, -1, 0, 0], [-1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]])


def ad_conjugate(g: LieMatrix, x: LieMatrix) -> LieMatrix:
    """g x g^-1; singular g raises InputError."""
    return g @ x @ g.inverse()


def ad_conjugate_tensor(g: LieMatrix, factors: Sequence[LieMatrix]) -> Tuple[LieMatrix, ...]:
    """Ad_g applied factor-wise to a decomposable tensor X ^ X' (x) X''."""
    g_inv = g.inverse()
    return tuple(g @ x @ g_inv for x in factors)


# ─── Decomposizione di Cartan ────────────────────────────────────────────────


@dataclass(frozen=True)
class CartanParts:
    k: LieMatrix
    p_plus: LieMatrix
    p_minus: LieMatrix

    def total(self) -> LieMatrix:
        return self.k + self.p_plus + self.p_minus


def in_k(x: LieMatrix) -> bool:
    """Complexified compact algebra: [[A, B], [-B, A]] inside sp(4)."""
    a, b = x.block(0, 0), x.block(0, 1)
    c, d = x.block(1, 0), x.block(1, 1)
    return in_sp4(x) and a == d and all(c[i][j] == -b[i][j] for i in range(2) for j in range(2))


def cartan_split(x: LieMatrix) -> CartanParts:
    if not in_sp4(x):
        raise InputError("cartan_split needs an element of the complexified symplectic algebra")
    half = Fraction(1, 2)
    a, b, c = x.block(0, 0), x.block(0, 1), x.block(1, 0)
    a_sym = [[(a[i][j] + a[j][i]) * half for j in range(2)] for i in range(2)]
    a_anti = [[(a[i][j] - a[j][i]) * half for j in range(2)] for i in range(2)]
    bc_sum = [[(b[i][j] + c[i][j]) * half for j in range(2)] for i in range(2)]
    bc_diff = [[(b[i][j] - c[i][j]) * half for j in range(2)] for i in range(2)]
    neg_diff = [[-v for v in row] for row in bc_diff]
    k_part = LieMatrix.from_blocks(a_anti, bc_diff, neg_diff, a_anti)
    z1 = [[(a_sym[i][j] - I_UNIT * bc_sum[i][j]) * half for j in range(2)] for i in range(2)]
    z2 = [[(a_sym[i][j] + I_UNIT * bc_sum[i][j]) * half for j in range(2)] for i in range(2)]
    return CartanParts(k_part, p_plus(z1), p_minus(z2))


# ─── Embedding di gl2 x gl2 ──────────────────────────────────────────────────

# e1 = (v+, 0), e2 = (0, v+), e3 = (v-, 0), e4 = (0, v-)
TANGENT_FRAME: Dict[str, Label] = {"e1": (2, 0), "e2": (0, 2), "e3": (-2, 0), "e4": (0, -2)}


def iota_push(v: Union[str, Mapping[str, ScalarLike]]) -> LieMatrix:
    """Push a tangent vector of gl2 x gl2 / k' into p+ + p-."""
    if isinstance(v, str):
        v = {v: 1}
    out = LieMatrix.zero()
    for name, coeff in v.items():
        if name not in TANGENT_FRAME:
            raise InputError(f"unknown tangent frame vector {name!r}")
        out = out + ROOT_VECTORS[TANGENT_FRAME[name]] * coeff
    return out
