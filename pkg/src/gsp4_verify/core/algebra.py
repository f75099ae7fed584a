"""
Exact algebra: the field Q(i, sqrt2), Laurent polynomials, rational
functions and truncated power series.

Scalars are elements of sympy's ``QQ.algebraic_field(I, sqrt(2))``;
Laurent polynomials are a monomial shift times an element of a sympy
``PolyRing`` over that field. Everything here is immutable.

Uso::

    from gsp4_verify.core.algebra import LaurentPoly, RationalFn, series_of

    T = LaurentPoly.variable(("T",), "T")
    f = RationalFn(LaurentPoly.one(("T",)), 1 - T)
    series_of(f, 2)  # 1 + T + T^2
"""

from __future__ import annotations

import logging
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple, Union

import sympy
from sympy import QQ
from sympy.polys.orderings import lex
from sympy.polys.polyerrors import ExactQuotientFailed
from sympy.polys.rings import PolyElement, PolyRing

from gsp4_verify.core.errors import DegenerateParameterError, InputError, SingularExpansionError

logger = logging.getLogger(__name__)

Rat = Fraction

Exponent = Tuple[int, ...]
ScalarLike = Union[int, Fraction, "CycScalar"]

# Exponent vectors are bounded 64-bit integers
_EXP_BOUND = 2**63


# ─── Q(i, sqrt2) ─────────────────────────────────────────────────────────────

FIELD = QQ.algebraic_field(sympy.I, sympy.sqrt(2))

# 1, i, sqrt2, i*sqrt2 as field elements
_BASIS = tuple(FIELD.from_sympy(e) for e in (sympy.Integer(1), sympy.I, sympy.sqrt(2), sympy.I * sympy.sqrt(2)))


def _rat(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"not an exact rational: {x!r}")


def _to_fraction(q) -> Fraction:
    return Fraction(int(q.numerator), int(q.denominator))


def _ground(q: Fraction):
    return FIELD.convert_from(QQ(q.numerator, q.denominator), QQ)


def _power_coords(elem) -> List[Fraction]:
    """Coordinates on the primitive-element power basis, lowest power first."""
    coeffs = [_to_fraction(q) for q in reversed(elem.to_list())]
    return coeffs + [Fraction(0)] * (len(_BASIS) - len(coeffs))


def _change_of_basis() -> Tuple[Tuple[Fraction, ...], ...]:
    columns = [_power_coords(b) for b in _BASIS]
    n = len(_BASIS)
    p = sympy.Matrix(n, n, lambda r, c: sympy.Rational(columns[c][r].numerator, columns[c][r].denominator))
    inv = p.inv()
    return tuple(tuple(Fraction(int(inv[r, c].p), int(inv[r, c].q)) for c in range(n)) for r in range(n))


_TO_BASIS = _change_of_basis()


class CycScalar:
    """An element c0 + c1*i + c2*sqrt2 + c3*i*sqrt2 of Q(i, sqrt2)."""

    __slots__ = ("_elem", "_coords")

    def __init__(self, c0: ScalarLike = 0, c1: ScalarLike = 0, c2: ScalarLike = 0, c3: ScalarLike = 0):
        coords = tuple(_rat(c) for c in (c0, c1, c2, c3))
        elem = FIELD.zero
        for c, b in zip(coords, _BASIS):
            if c:
                elem = elem + _ground(c) * b
        self._elem = elem
        self._coords = coords

    @classmethod
    def wrap(cls, elem) -> "CycScalar":
        """Wrap an element of FIELD."""
        obj = cls.__new__(cls)
        obj._elem = elem
        obj._coords = None
        return obj

    @classmethod
    def of(cls, x: ScalarLike) -> "CycScalar":
        if isinstance(x, CycScalar):
            return x
        return cls(_rat(x))

    @property
    def element(self):
        return self._elem

    def coordinates(self) -> Tuple[Fraction, Fraction, Fraction, Fraction]:
        if self._coords is None:
            v = _power_coords(self._elem)
            self._coords = tuple(sum((a * b for a, b in zip(row, v)), Fraction(0)) for row in _TO_BASIS)
        return self._coords

    @property
    def c0(self) -> Fraction:
        return self.coordinates()[0]

    @property
    def c1(self) -> Fraction:
        return self.coordinates()[1]

    @property
    def c2(self) -> Fraction:
        return self.coordinates()[2]

    @property
    def c3(self) -> Fraction:
        return self.coordinates()[3]

    @property
    def is_rational(self) -> bool:
        return len(self._elem.to_list()) <= 1

    @property
    def in_gaussian_field(self) -> bool:
        """True when the value lies in Q(i)."""
        _, _, c2, c3 = self.coordinates()
        return not (c2 or c3)

    def to_fraction(self) -> Fraction:
        if not self.is_rational:
            raise InputError(f"{self} is not rational")
        coeffs = self._elem.to_list()
        return _to_fraction(coeffs[0]) if coeffs else Fraction(0)

    def conjugate(self) -> "CycScalar":
        """Complex conjugation i -> -i (sqrt2 is real)."""
        if self.is_rational:
            return self
        c0, c1, c2, c3 = self.coordinates()
        return CycScalar(c0, -c1, c2, -c3)

    # Aritmetica

    def __add__(self, other):
        if not isinstance(other, (CycScalar, int, Fraction)):
            return NotImplemented
        return CycScalar.wrap(self._elem + CycScalar.of(other)._elem)

    __radd__ = __add__

    def __neg__(self):
        return CycScalar.wrap(-self._elem)

    def __sub__(self, other):
        if not isinstance(other, (CycScalar, int, Fraction)):
            return NotImplemented
        return CycScalar.wrap(self._elem - CycScalar.of(other)._elem)

    def __rsub__(self, other):
        if not isinstance(other, (CycScalar, int, Fraction)):
            return NotImplemented
        return CycScalar.wrap(CycScalar.of(other)._elem - self._elem)

    def __mul__(self, other):
        if not isinstance(other, (CycScalar, int, Fraction)):
            return NotImplemented
        return CycScalar.wrap(self._elem * CycScalar.of(other)._elem)

    __rmul__ = __mul__

    def inverse(self) -> "CycScalar":
        """Multiplicative inverse; ZeroDivisionError on zero."""
        if not self:
            raise ZeroDivisionError("inverse of zero in Q(i, sqrt2)")
        return CycScalar.wrap(FIELD.quo(FIELD.one, self._elem))

    def __truediv__(self, other):
        if not isinstance(other, (CycScalar, int, Fraction)):
            return NotImplemented
        return self * CycScalar.of(other).inverse()

    def __rtruediv__(self, other):
        if not isinstance(other, (CycScalar, int, Fraction)):
            return NotImplemented
        return CycScalar.of(other) * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        base = self if n >= 0 else self.inverse()
        return CycScalar.wrap(FIELD.pow(base._elem, abs(n)))

    def __bool__(self):
        return bool(self._elem)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_rational and self.to_fraction() == other
        if isinstance(other, CycScalar):
            return self._elem == other._elem
        return NotImplemented

    def __hash__(self):
        if self.is_rational:
            return hash(self.to_fraction())
        return hash(self.coordinates())

    def to_mpc(self):
        """Convert to an mpmath complex at the current working precision."""
        import mpmath

        def mp(q: Fraction):
            return mpmath.mpf(q.numerator) / q.denominator

        c0, c1, c2, c3 = self.coordinates()
        r2 = mpmath.sqrt(2)
        return mpmath.mpc(mp(c0) + mp(c2) * r2, mp(c1) + mp(c3) * r2)

    def __str__(self):
        parts = []
        for coeff, unit in zip(self.coordinates(), ("", "i", "sqrt2", "i*sqrt2")):
            if not coeff:
                continue
            if not unit:
                parts.append(str(coeff))
            elif coeff == 1:
                parts.append(unit)
            elif coeff == -1:
                parts.append(f"-{unit}")
            else:
                parts.append(f"{coeff}*{unit}")
        if not parts:
            return "0"
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"CycScalar({self})"


ZERO = CycScalar()
ONE = CycScalar(1)
I_UNIT = CycScalar(0, 1)
SQRT2 = CycScalar(0, 0, 1)
# exp(i*pi/4) = (1 + i)/sqrt2
ZETA8 = CycScalar(0, 0, Fraction(1, 2), Fraction(1, 2))


def scalar(x: ScalarLike) -> CycScalar:
    return CycScalar.of(x)


# ─── Laurent polynomials ─────────────────────────────────────────────────────


def _check_exponent(exps: Exponent) -> None:
    for e in exps:
        if not -_EXP_BOUND <= e < _EXP_BOUND:
            raise OverflowError(f"exponent {e} exceeds the 64-bit bound")


@lru_cache(maxsize=None)
def poly_ring(variables: Tuple[str, ...]) -> PolyRing:
    """Sparse polynomial ring over Q(i, sqrt2) in ``variables`` (lex order)."""
    return PolyRing(variables, FIELD, lex)


def _shifted(ring: PolyRing, poly: PolyElement, delta: Sequence[int]) -> PolyElement:
    if not any(delta):
        return poly
    return ring.from_dict({tuple(a + d for a, d in zip(m, delta)): c for m, c in poly.items()})


class LaurentPoly:
    """Sparse Laurent polynomial over Q(i, sqrt2) in named variables.

    Stored as x^shift * poly, where poly lives in :func:`poly_ring` and
    no variable divides it. Iteration and text rendering use descending
    lexicographic order.
    """

    __slots__ = ("variables", "ring", "shift", "poly", "_terms", "_hash")

    def __init__(self, variables: Sequence[str], terms: Optional[Mapping[Exponent, ScalarLike]] = None):
        variables = tuple(variables)
        if len(set(variables)) != len(variables):
            raise InputError(f"duplicate variable names: {variables}")
        n = len(variables)
        clean: Dict[Exponent, CycScalar] = {}
        for exps, coeff in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != n:
                raise InputError(f"exponent {exps} does not match variables {variables}")
            _check_exponent(exps)
            c = CycScalar.of(coeff)
            if c:
                clean[exps] = c
        ring = poly_ring(variables)
        if clean:
            low = tuple(min(e[i] for e in clean) for i in range(n))
        else:
            low = (0,) * n
        poly = ring.from_dict({tuple(a - b for a, b in zip(e, low)): c.element for e, c in clean.items()})
        self._set(variables, ring, low, poly)

    def _set(self, variables, ring, shift, poly) -> None:
        self.variables: Tuple[str, ...] = variables
        self.ring: PolyRing = ring
        self.shift: Exponent = shift
        self.poly: PolyElement = poly
        self._terms = None
        self._hash = None

    @classmethod
    def _from_parts(cls, variables: Tuple[str, ...], shift: Sequence[int], poly: PolyElement) -> "LaurentPoly":
        # Normalizza: nessuna variabile divide poly
        ring = poly_ring(variables)
        n = len(variables)
        if not poly:
            shift = (0,) * n
        else:
            monoms = list(poly.keys())
            low = [min(m[i] for m in monoms) for i in range(n)]
            if any(low):
                poly = _shifted(ring, poly, [-e for e in low])
            shift = tuple(s + e for s, e in zip(shift, low))
            _check_exponent(shift)
            _check_exponent(tuple(s + max(m[i] for m in monoms) - low[i] for i, s in enumerate(shift)))
        obj = cls.__new__(cls)
        obj._set(variables, ring, tuple(shift), poly)
        return obj

    # Costruttori

    @classmethod
    def zero(cls, variables: Sequence[str]) -> "LaurentPoly":
        return cls(variables)

    @classmethod
    def constant(cls, variables: Sequence[str], value: ScalarLike) -> "LaurentPoly":
        return cls(variables, {(0,) * len(tuple(variables)): value})

    @classmethod
    def one(cls, variables: Sequence[str]) -> "LaurentPoly":
        return cls.constant(variables, 1)

    @classmethod
    def monomial(cls, variables: Sequence[str], exps: Sequence[int], coeff: ScalarLike = 1) -> "LaurentPoly":
        return cls(variables, {tuple(exps): coeff})

    @classmethod
    def variable(cls, variables: Sequence[str], name: str) -> "LaurentPoly":
        variables = tuple(variables)
        if name not in variables:
            raise InputError(f"unknown variable {name!r}; have {variables}")
        exps = tuple(1 if v == name else 0 for v in variables)
        return cls(variables, {exps: 1})

    # Interrogazione

    @property
    def terms(self) -> Dict[Exponent, CycScalar]:
        """Exponent vector -> coefficient, no stored zeros."""
        if self._terms is None:
            self._terms = {
                tuple(m_i + s_i for m_i, s_i in zip(m, self.shift)): CycScalar.wrap(c) for m, c in self.poly.items()
            }
        return self._terms

    def __iter__(self) -> Iterator[Tuple[Exponent, CycScalar]]:
        terms = self.terms
        for exps in sorted(terms, reverse=True):
            yield exps, terms[exps]

    def __len__(self):
        return len(self.poly)

    def is_zero(self) -> bool:
        return not self.poly

    def __bool__(self):
        return bool(self.poly)

    def is_monomial(self) -> bool:
        return len(self.poly) == 1

    def is_constant(self) -> bool:
        return self.is_zero() or (self.is_monomial() and all(e == 0 for e in next(iter(self.terms))))

    def constant_value(self) -> CycScalar:
        return self.terms.get((0,) * len(self.variables), ZERO)

    def coefficient(self, exps: Sequence[int]) -> CycScalar:
        return self.terms.get(tuple(exps), ZERO)

    def index_of(self, name: str) -> int:
        try:
            return self.variables.index(name)
        except ValueError:
            raise InputError(f"unknown variable {name!r}; have {self.variables}") from None

    def degree_range(self, name: str) -> Tuple[int, int]:
        """(min, max) exponent of ``name``; (0, 0) for the zero polynomial."""
        if self.is_zero():
            return (0, 0)
        idx = self.index_of(name)
        values = [e[idx] for e in self.terms]
        return (min(values), max(values))

    def leading_term(self) -> Tuple[Exponent, CycScalar]:
        if self.is_zero():
            raise ArithmeticError("zero polynomial has no leading term")
        exps = max(self.terms)
        return exps, self.terms[exps]

    def coefficients_in(self, name: str) -> Dict[int, "LaurentPoly"]:
        """Split by powers of ``name``; each piece keeps the variable list with that exponent zeroed."""
        idx = self.index_of(name)
        buckets: Dict[int, Dict[Exponent, CycScalar]] = {}
        for exps, c in self.terms.items():
            k = exps[idx]
            reduced = exps[:idx] + (0,) + exps[idx + 1 :]
            buckets.setdefault(k, {})[reduced] = c
        return {k: LaurentPoly(self.variables, t) for k, t in buckets.items()}

    # Aritmetica

    def _coerce(self, other) -> Optional["LaurentPoly"]:
        if isinstance(other, LaurentPoly):
            if other.variables != self.variables:
                raise InputError(f"variable lists differ: {self.variables} vs {other.variables}")
            return other
        if isinstance(other, (int, Fraction, CycScalar)):
            return LaurentPoly.constant(self.variables, other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.is_zero():
            return self
        if self.is_zero():
            return o
        low = tuple(min(a, b) for a, b in zip(self.shift, o.shift))
        total = _shifted(self.ring, self.poly, [a - b for a, b in zip(self.shift, low)]) + _shifted(
            self.ring, o.poly, [a - b for a, b in zip(o.shift, low)]
        )
        return LaurentPoly._from_parts(self.variables, low, total)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._from_parts(self.variables, self.shift, -self.poly)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, CycScalar)):
            c = CycScalar.of(other)
            if not c:
                return LaurentPoly.zero(self.variables)
            return LaurentPoly._from_parts(self.variables, self.shift, self.poly.mul_ground(c.element))
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        shift = tuple(a + b for a, b in zip(self.shift, o.shift))
        return LaurentPoly._from_parts(self.variables, shift, self.poly * o.poly)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            if not self.is_monomial():
                raise ArithmeticError("negative power of a non-monomial Laurent polynomial")
            ((exps, c),) = self.terms.items()
            return LaurentPoly.monomial(self.variables, [e * n for e in exps], c**n)
        return LaurentPoly._from_parts(self.variables, tuple(s * n for s in self.shift), self.poly**n)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, CycScalar)):
            other = LaurentPoly.constant(self.variables, other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.variables == other.variables and self.shift == other.shift and self.poly == other.poly

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.variables, self.shift, frozenset(self.poly.items())))
        return self._hash

    def conjugate(self) -> "LaurentPoly":
        return LaurentPoly(self.variables, {e: c.conjugate() for e, c in self.terms.items()})

    # Mappe e sostituzioni

    def map_exponents(self, fn: Callable[[Exponent], Exponent]) -> "LaurentPoly":
        """Apply a monoid map on exponent vectors (e.g. a Weyl substitution)."""
        terms: Dict[Exponent, CycScalar] = {}
        for e, c in self.terms.items():
            new = tuple(fn(e))
            _check_exponent(new)
            terms[new] = terms.get(new, ZERO) + c
        return LaurentPoly(self.variables, terms)

    def with_variables(self, variables: Sequence[str]) -> "LaurentPoly":
        """Re-embed into a larger variable list (missing variables get exponent 0)."""
        variables = tuple(variables)
        positions = []
        for v in self.variables:
            if v not in variables:
                raise InputError(f"variable {v!r} missing from {variables}")
            positions.append(variables.index(v))
        terms = {}
        for e, c in self.terms.items():
            new = [0] * len(variables)
            for pos, val in zip(positions, e):
                new[pos] = val
            terms[tuple(new)] = c
        return LaurentPoly(variables, terms)

    def substitute(self, mapping: Mapping[str, Union[ScalarLike, "LaurentPoly"]], target: Sequence[str]) -> "LaurentPoly":
        """Ring homomorphism sending each mapped variable to a value over ``target``.

        Unmapped variables go to the same-named variable of ``target``.
        """
        target = tuple(target)
        images = []
        for v in self.variables:
            if v in mapping:
                val = mapping[v]
                images.append(val if isinstance(val, LaurentPoly) else LaurentPoly.constant(target, val))
            else:
                images.append(LaurentPoly.variable(target, v))
        result = LaurentPoly.zero(target)
        for e, c in self.terms.items():
            term = LaurentPoly.constant(target, c)
            for img, k in zip(images, e):
                if k:
                    if k < 0 and img.is_zero():
                        raise DegenerateParameterError(f"negative power of a vanishing substitution in {self.variables}")
                    term = term * (img**k)
            result = result + term
        return result

    def evaluate(self, values: Mapping[str, ScalarLike]) -> CycScalar:
        """Exact evaluation at scalar values for every variable."""
        missing = [v for v in self.variables if v not in values]
        if missing:
            raise InputError(f"missing values for {missing}")
        vals = [CycScalar.of(values[v]) for v in self.variables]
        total = ZERO
        for e, c in self.terms.items():
            term = c
            for val, k in zip(vals, e):
                if k:
                    if k < 0 and not val:
                        raise DegenerateParameterError("negative power of zero during evaluation")
                    term = term * (val**k)
            total = total + term
        return total

    # Divisione esatta

    def divide_exact(self, divisor: "LaurentPoly") -> "LaurentPoly":
        """Quotient q with q*divisor == self, or ArithmeticError when none exists."""
        d = self._coerce(divisor)
        if d is None or d.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return LaurentPoly.zero(self.variables)
        try:
            quotient = self.poly.exquo(d.poly)
        except ExactQuotientFailed:
            raise ArithmeticError("divisor does not divide the polynomial exactly") from None
        shift = tuple(a - b for a, b in zip(self.shift, d.shift))
        return LaurentPoly._from_parts(self.variables, shift, quotient)

    # Rendering

    def to_text(self) -> str:
        if self.is_zero():
            return "0"
        pieces = []
        for exps, c in self:
            mono = "*".join(
                v if k == 1 else f"{v}^{k}" if k > 0 else f"{v}^({k})" for v, k in zip(self.variables, exps) if k
            )
            coeff = str(c)
            if not mono:
                pieces.append(coeff if c.is_rational else f"({coeff})")
            elif c == 1:
                pieces.append(mono)
            elif c == -1:
                pieces.append(f"-{mono}")
            elif c.is_rational:
                pieces.append(f"{coeff}*{mono}")
            else:
                pieces.append(f"({coeff})*{mono}")
        return " + ".join(pieces).replace("+ -", "- ")

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"LaurentPoly({self.variables}, {self.to_text()})"

# ─── Rational functions ──────────────────────────────────────────────────────


class RationalFn:
    """Quotient of two Laurent polynomials over the same variables.

    A monomial denominator is folded into the numerator, so Laurent
    polynomials always come back with denominator 1.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: LaurentPoly, den: Optional[LaurentPoly] = None):
        if den is None:
            den = LaurentPoly.one(num.variables)
        if num.variables != den.variables:
            raise InputError(f"variable lists differ: {num.variables} vs {den.variables}")
        if den.is_zero():
            raise InputError("rational function with zero denominator")
        if den.is_monomial():
            ((exps, c),) = den.terms.items()
            inv = LaurentPoly.monomial(den.variables, [-e for e in exps], c.inverse())
            num = num * inv
            den = LaurentPoly.one(den.variables)
        self.num = num
        self.den = den

    @property
    def variables(self) -> Tuple[str, ...]:
        return self.num.variables

    @classmethod
    def of(cls, value, variables: Sequence[str]) -> "RationalFn":
        if isinstance(value, RationalFn):
            return value
        if isinstance(value, LaurentPoly):
            return cls(value)
        return cls(LaurentPoly.constant(variables, value))

    def is_polynomial(self) -> bool:
        return self.den == 1

    def as_poly(self) -> LaurentPoly:
        """Return the numerator when the denominator is 1, else attempt exact division."""
        if self.is_polynomial():
            return self.num
        return self.num.divide_exact(self.den)

    def simplified(self) -> "RationalFn":
        """Exact quotient when there is one, else the gcd-cancelled fraction."""
        try:
            return RationalFn(self.as_poly())
        except ArithmeticError:
            pass
        num, den = self.num.poly.cancel(self.den.poly)
        return RationalFn(
            LaurentPoly._from_parts(self.variables, self.num.shift, num),
            LaurentPoly._from_parts(self.variables, self.den.shift, den),
        )

    def _other(self, other) -> Optional["RationalFn"]:
        if isinstance(other, RationalFn):
            if other.variables != self.variables:
                raise InputError(f"variable lists differ: {self.variables} vs {other.variables}")
            return other
        if isinstance(other, (LaurentPoly, int, Fraction, CycScalar)):
            return RationalFn.of(other, self.variables)
        return None

    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        if self.den == o.den:
            return RationalFn(self.num + o.num, self.den)
        return RationalFn(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFn(-self.num, self.den)

    def __sub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return RationalFn(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        if o.num.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFn(self.num * o.den, self.den * o.num)

    def __eq__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return rf_equal(self, o)

    __hash__ = None

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def map_exponents(self, fn: Callable[[Exponent], Exponent]) -> "RationalFn":
        return RationalFn(self.num.map_exponents(fn), self.den.map_exponents(fn))

    def evaluate(self, values: Mapping[str, ScalarLike]) -> CycScalar:
        d = self.den.evaluate(values)
        if not d:
            raise DegenerateParameterError("denominator vanishes at the requested point")
        return self.num.evaluate(values) / d

    def to_text(self) -> str:
        if self.is_polynomial():
            return self.num.to_text()
        return f"({self.num.to_text()}) / ({self.den.to_text()})"

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"RationalFn({self.to_text()})"


def rf_equal(a: RationalFn, b: RationalFn) -> bool:
    """Equality by cross-multiplication: a.num*b.den - b.num*a.den == 0."""
    if a.variables != b.variables:
        raise InputError(f"variable lists differ: {a.variables} vs {b.variables}")
    if a.den == b.den:
        return a.num == b.num
    return (a.num * b.den - b.num * a.den).is_zero()


# ─── Truncated power series ──────────────────────────────────────────────────


class TruncSeries:
    """Power series sum_{n<=order} c_n T^n with RationalFn coefficients.

    The coefficients live over the same variable list as the source
    function, with the series variable's exponent zeroed.
    """

    __slots__ = ("variable", "order", "coefficients", "variables")

    def __init__(self, variable: str, order: int, coefficients: Iterable[RationalFn], variables: Sequence[str]):
        if order < 0:
            raise InputError(f"order must be non-negative, got {order}")
        self.variable = variable
        self.order = order
        self.variables = tuple(variables)
        coeffs = list(coefficients)[: order + 1]
        while len(coeffs) < order + 1:
            coeffs.append(RationalFn(LaurentPoly.zero(self.variables)))
        self.coefficients: List[RationalFn] = coeffs

    def coefficient(self, n: int) -> RationalFn:
        return self.coefficients[n]

    def _check(self, other: "TruncSeries") -> int:
        if other.variable != self.variable or other.variables != self.variables:
            raise InputError("series over different variables")
        return min(self.order, other.order)

    def __add__(self, other: "TruncSeries") -> "TruncSeries":
        order = self._check(other)
        return TruncSeries(
            self.variable, order, [self.coefficients[n] + other.coefficients[n] for n in range(order + 1)], self.variables
        )

    def __sub__(self, other: "TruncSeries") -> "TruncSeries":
        order = self._check(other)
        return TruncSeries(
            self.variable, order, [self.coefficients[n] - other.coefficients[n] for n in range(order + 1)], self.variables
        )

    def __mul__(self, other: "TruncSeries") -> "TruncSeries":
        order = self._check(other)
        coeffs = []
        for n in range(order + 1):
            acc = RationalFn(LaurentPoly.zero(self.variables))
            for j in range(n + 1):
                acc = acc + self.coefficients[j] * other.coefficients[n - j]
            coeffs.append(acc)
        return TruncSeries(self.variable, order, coeffs, self.variables)

    def __eq__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        order = self._check(other)
        return all(rf_equal(self.coefficients[n], other.coefficients[n]) for n in range(order + 1))

    __hash__ = None

    def first_difference(self, other: "TruncSeries") -> Optional[int]:
        """Index of the first coefficient where the two series differ, or None."""
        order = self._check(other)
        for n in range(order + 1):
            if not rf_equal(self.coefficients[n], other.coefficients[n]):
                return n
        return None

    def to_rational_fn(self) -> RationalFn:
        """The truncation as a polynomial in the series variable."""
        t = LaurentPoly.variable(self.variables, self.variable)
        total = RationalFn(LaurentPoly.zero(self.variables))
        power = LaurentPoly.one(self.variables)
        for c in self.coefficients:
            total = total + c * power
            power = power * t
        return total

    def __repr__(self):
        return f"TruncSeries({self.variable}, order={self.order})"


def series_of(f: RationalFn, order: int, variable: str = "T") -> TruncSeries:
    """Expand f in powers of ``variable`` up to ``order`` (inclusive).

    s_n = (N_n - sum_{j>=1} D_j s_{n-j}) / D_0 ; D_0 must be non-zero.
    """
    if order < 0:
        raise InputError(f"order must be non-negative, got {order}")
    idx = f.num.index_of(variable)
    num, den = f.num, f.den
    den_lo, _ = den.degree_range(variable)
    if den_lo:
        shift = tuple(-den_lo if i == idx else 0 for i in range(len(f.variables)))
        mono = LaurentPoly.monomial(f.variables, shift)
        num, den = num * mono, den * mono
    if num.degree_range(variable)[0] < 0:
        raise SingularExpansionError(f"negative powers of {variable} in the numerator")
    num_parts = num.coefficients_in(variable)
    den_parts = den.coefficients_in(variable)
    d0 = den_parts.get(0)
    if d0 is None or d0.is_zero():
        raise SingularExpansionError(f"denominator vanishes at {variable}=0")
    d0_rf = RationalFn(d0)
    zero = RationalFn(LaurentPoly.zero(f.variables))
    max_j = max(den_parts)
    coeffs: List[RationalFn] = []
    for n in range(order + 1):
        acc = RationalFn(num_parts[n]) if n in num_parts else zero
        for j in range(1, min(n, max_j) + 1):
            dj = den_parts.get(j)
            if dj is not None:
                acc = acc - coeffs[n - j] * dj
        coeffs.append(acc / d0_rf)
    logger.debug("series_of: expanded to order %d in %s", order, variable)
    return TruncSeries(variable, order, coeffs, f.variables)
