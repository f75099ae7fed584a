"""
Exact sparse linear algebra over Q(i, sqrt2).

Vectors are dicts key -> CycScalar with no stored zeros; keys are any
mutually comparable hashables (tuples in practice). Spans are grown
incrementally by :class:`EchelonBasis`; kernels and ranks of a fixed
family go through sympy's ``DomainMatrix`` over the same field.
"""

from __future__ import annotations

from typing import Dict, Hashable, Iterable, List, Mapping, Optional, Tuple

from sympy.polys.matrices import DomainMatrix

from gsp4_verify.core.algebra import FIELD, ONE, ZERO, CycScalar, ScalarLike

Vec = Dict[Hashable, CycScalar]
# Operatore lineare: immagine di ogni vettore di base
Operator = Dict[Hashable, Vec]


def vec(items: Mapping[Hashable, ScalarLike]) -> Vec:
    out: Vec = {}
    for k, c in items.items():
        c = CycScalar.of(c)
        if c:
            out[k] = c
    return out


def axpy(target: Vec, coeff: ScalarLike, source: Mapping[Hashable, CycScalar]) -> None:
    """In-place target += coeff * source."""
    coeff = CycScalar.of(coeff)
    if not coeff:
        return
    for k, c in source.items():
        s = target.get(k, ZERO) + coeff * c
        if s:
            target[k] = s
        else:
            target.pop(k, None)


def combine(terms: Iterable[Tuple[ScalarLike, Mapping[Hashable, CycScalar]]]) -> Vec:
    out: Vec = {}
    for coeff, v in terms:
        axpy(out, coeff, v)
    return out


def scale(v: Mapping[Hashable, CycScalar], coeff: ScalarLike) -> Vec:
    coeff = CycScalar.of(coeff)
    if not coeff:
        return {}
    return {k: coeff * c for k, c in v.items()}


def sub(a: Mapping[Hashable, CycScalar], b: Mapping[Hashable, CycScalar]) -> Vec:
    out = dict(a)
    axpy(out, -1, b)
    return out


def apply(op: Operator, v: Mapping[Hashable, CycScalar]) -> Vec:
    """Apply a linear operator given by the images of basis keys."""
    out: Vec = {}
    for k, c in v.items():
        image = op.get(k)
        if image:
            axpy(out, c, image)
    return out


def conjugate(v: Mapping[Hashable, CycScalar]) -> Vec:
    return {k: c.conjugate() for k, c in v.items()}


class EchelonBasis:
    """Incrementally built reduced row echelon basis of a span.

    Each row has pivot = its largest key, normalized to 1, and no other
    row has a non-zero entry at that pivot. Rows also remember how they
    combine the vectors passed to :meth:`add`.
    """

    def __init__(self):
        self.rows: Dict[Hashable, Vec] = {}
        self._combos: Dict[Hashable, Vec] = {}
        self._count = 0
        self.relations: List[Vec] = []

    @property
    def dimension(self) -> int:
        return len(self.rows)

    def __len__(self):
        return len(self.rows)

    def reduce(self, v: Mapping[Hashable, CycScalar]) -> Tuple[Vec, Vec]:
        """Return (residual, combination over inputs that was subtracted)."""
        residual = dict(v)
        used: Vec = {}
        for pivot in [k for k in v if k in self.rows]:
            c = residual.get(pivot)
            if c:
                axpy(residual, -c, self.rows[pivot])
                axpy(used, c, self._combos[pivot])
        return residual, used

    def add(self, v: Mapping[Hashable, CycScalar]) -> bool:
        """Add v to the span; True when it was independent.

        A dependent v records a relation among the added vectors.
        """
        index = self._count
        self._count += 1
        residual, used = self.reduce(v)
        combo = scale(used, -1)
        combo[index] = CycScalar.of(1)
        if not residual:
            self.relations.append(combo)
            return False
        pivot = max(residual)
        inv = residual[pivot].inverse()
        row = scale(residual, inv)
        combo = scale(combo, inv)
        for other_pivot, other in self.rows.items():
            c = other.get(pivot)
            if c:
                axpy(other, -c, row)
                axpy(self._combos[other_pivot], -c, combo)
        self.rows[pivot] = row
        self._combos[pivot] = combo
        return True

    def contains(self, v: Mapping[Hashable, CycScalar]) -> bool:
        residual, _ = self.reduce(v)
        return not residual

    def coordinates(self, v: Mapping[Hashable, CycScalar]) -> Optional[Vec]:
        """Coefficients over the added vectors reproducing v, or None outside the span."""
        residual, used = self.reduce(v)
        if residual:
            return None
        return used

    def basis(self) -> List[Vec]:
        """Reduced rows sorted by pivot."""
        return [self.rows[p] for p in sorted(self.rows)]


def _matrix(vectors: List[Mapping[Hashable, CycScalar]]) -> DomainMatrix:
    """Columns are the vectors, rows their sorted keys."""
    keys = sorted({k for v in vectors for k in v})
    rows = [[CycScalar.of(v.get(k, ZERO)).element for v in vectors] for k in keys]
    return DomainMatrix(rows, (len(keys), len(vectors)), FIELD)


def relations(vectors: List[Mapping[Hashable, CycScalar]]) -> List[Vec]:
    """Basis of {c : sum_i c_i vectors[i] = 0}, keyed by index."""
    vectors = list(vectors)
    if not vectors:
        return []
    if not any(vectors):
        return [{i: ONE} for i in range(len(vectors))]
    kernel = _matrix(vectors).nullspace()
    rows, cols = kernel.shape
    out = []
    for r in range(rows):
        rel = vec({i: CycScalar.wrap(kernel[r, i].element) for i in range(cols)})
        if rel:
            out.append(rel)
    return out


def rank(vectors: Iterable[Mapping[Hashable, CycScalar]]) -> int:
    vectors = list(vectors)
    if not any(vectors):
        return 0
    return _matrix(vectors).rank()
