"""
Exact constants and the four-term assembly of the regulator pairing.

The global integrals Xi / Xibar are carried as opaque tokens; only the
finite data around them (factorial constants, projection coefficients,
basis pairings, weight constraints, archimedean survival) is computed.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Dict, List, Optional, Tuple

from gsp4_verify.core.algebra import I_UNIT, CycScalar
from gsp4_verify.core.archimedean import arch_vanishing
from gsp4_verify.core.errors import ConstructionError, InputError
from gsp4_verify.core.lie import P_MINUS_LABELS, P_PLUS_LABELS, Label
from gsp4_verify.core.roots import BranchQuery, branching_admissible
from gsp4_verify.core.wedge import KType, WedgeSpace, component_coefficients, wedge_decompose
from gsp4_verify.models.config import CITATIONS, QUOTED_ALPHA, QUOTED_BETA3, QUOTED_GAMMA
from gsp4_verify.models.results import (
    IntegralToken,
    PairingConstants,
    RegulatorExpression,
    RegulatorTerm,
    SurvivalReport,
    TermVerdict,
    VerificationReport,
)

logger = logging.getLogger(__name__)

TWO_I = I_UNIT * 2

# ─── Costanti A, B, C ────────────────────────────────────────────────────────


def _falling(n: int, m: int) -> int:
    """n (n-1) ... (n-m+1); extends n!/(n-m)! to all integers n."""
    out = 1
    for j in range(m):
        out *= n - j
    return out


def _check_index(k: int, kp: int, i: int, j: Optional[int] = None) -> None:
    if not k >= kp >= 0:
        raise InputError(f"need k >= k' >= 0, got ({k}, {kp})")
    if not 0 <= i <= k + kp - 1:
        raise InputError(f"index i = {i} outside 0..{k + kp - 1}")
    if j is not None and not 0 <= j <= min(3, i):
        raise InputError(f"index j = {j} outside 0..{min(3, i)}")


def constant_a(k: int, kp: int, i: int, j: int, strict: bool = True) -> int:
    """(n+4-i)!/(n+4-i-j)! * (i+j)!/(i-j)! * (n-i+j)!/(n-i)!, n = k + k'."""
    if strict:
        _check_index(k, kp, i, j)
    n = k + kp
    return _falling(n + 4 - i, j) * _falling(i + j, 2 * j) * _falling(n - i + j, j)


def constant_b(k: int, kp: int, i: int, strict: bool = True) -> int:
    if strict:
        _check_index(k, kp, i)
    return (i + 1) * (k + kp + 4 - i)


def constant_c(k: int, kp: int, i: int, strict: bool = True) -> int:
    if strict:
        _check_index(k, kp, i)
    return i * (k + kp - i + 1)


def constants(k: int, kp: int) -> PairingConstants:
    if not k >= kp >= 0:
        raise InputError(f"need k >= k' >= 0, got ({k}, {kp})")
    out = PairingConstants(k, kp)
    for i in range(k + kp):
        out.B[i] = constant_b(k, kp, i)
        out.C[i] = constant_c(k, kp, i)
        for j in range(min(3, i) + 1):
            out.A[(i, j)] = constant_a(k, kp, i, j)
    return out


# ─── Accoppiamento delle basi a_j ────────────────────────────────────────────


def a_pairing(p: int, q: int, r: int, s: int, rp: int, sp: int) -> CycScalar:
    """<a_r (x) a_s, a_r' (x) a_s'> = (-1)^(r+s) (2i)^(-p-q) C(p,r) C(q,s) when r+r' = p, s+s' = q."""
    for name, idx, top in (("r", r, p), ("r'", rp, p), ("s", s, q), ("s'", sp, q)):
        if not 0 <= idx <= top:
            raise InputError(f"{name} = {idx} outside 0..{top}")
    if r + rp != p or s + sp != q:
        return CycScalar.of(0)
    sign = -1 if (r + s) % 2 else 1
    return TWO_I ** (-p - q) * (sign * comb(p, r) * comb(q, s))


# ─── Coefficienti di proiezione ──────────────────────────────────────────────

HW_31: Tuple[Tuple[Label, ...], Tuple[Label, ...]] = (((2, 0), (1, 1)), ((0, -2),))
U_VECTOR: Tuple[Tuple[Label, ...], Tuple[Label, ...]] = (((2, 0), (0, 2)), ((0, -2),))
A_VECTOR: Tuple[Tuple[Label, ...], Tuple[Label, ...]] = (((2, 0), (0, 2)), ((-2, 0),))


@dataclass(frozen=True)
class ProjectionCoefficients:
    alpha: Fraction
    beta3: Fraction
    gamma: Fraction


def _as_fraction(c: CycScalar) -> Fraction:
    if not c.is_rational:
        raise ConstructionError(f"projection coefficient {c} is not rational")
    return c.to_fraction()


def projection_coeffs(
    plus_order: Tuple[Label, ...] = P_PLUS_LABELS, minus_order: Tuple[Label, ...] = P_MINUS_LABELS
) -> ProjectionCoefficients:
    """tau_(3,-1) and tau_(1,1) components inside Lambda^2 p+ (x) p-.

    alpha:  u = X20 ^ X02 (x) X0-2 against X_(-1,1) hw
    beta3:  X20 ^ X02 (x) X-20 against X_(-1,1)^3 hw
    gamma:  tau_(1,1) component of u
    with hw = X20 ^ X11 (x) X0-2.
    """
    space = WedgeSpace(2, 1, tuple(plus_order), tuple(minus_order))
    decomposition = wedge_decompose((2, 1), space)
    if any(m != 1 for m in decomposition.components.values()):
        raise ConstructionError("Lambda^2 p+ (x) p- is not multiplicity free")
    hw = space.key(*HW_31)
    if space.raise_(hw):
        raise ConstructionError("X20 ^ X11 (x) X0-2 is not a highest-weight vector")
    tops = {tau: vecs[0] for tau, vecs in decomposition.highest_vectors.items()}
    tops[KType(3, -1)] = hw

    u_parts = component_coefficients(space, space.key(*U_VECTOR), tops)
    a_parts = component_coefficients(space, space.key(*A_VECTOR), tops)
    result = ProjectionCoefficients(
        alpha=_as_fraction(u_parts[KType(3, -1)]),
        beta3=_as_fraction(a_parts[KType(3, -1)]),
        gamma=_as_fraction(u_parts[KType(1, 1)]),
    )
    logger.info("projection coefficients: alpha=%s beta3=%s gamma=%s", result.alpha, result.beta3, result.gamma)
    return result


def verify_projection_coeffs() -> VerificationReport:
    report = VerificationReport("projection-coefficients", citations=[CITATIONS["projection"], CITATIONS["wedge"]])
    computed = projection_coeffs()
    for name, value, quoted in (
        ("alpha", computed.alpha, QUOTED_ALPHA),
        ("beta3", computed.beta3, QUOTED_BETA3),
        ("gamma", computed.gamma, QUOTED_GAMMA),
    ):
        if value == quoted:
            report.add(f"{name} computed = quoted", value)
        else:
            report.fail(f"{name}: computed {value}, quoted {quoted}", value)
    return report


# ─── Vincoli di peso ─────────────────────────────────────────────────────────


@dataclass(frozen=True)
class VanishingCase:
    label: str
    i: int
    index_name: str
    index_value: Fraction

    @property
    def integral(self) -> bool:
        return self.index_value.denominator == 1

    @property
    def vacuous(self) -> bool:
        return not self.integral


def vanishing_constraints(p: int, q: int, k: int, kp: int) -> List[VanishingCase]:
    """Forced (i, r or s) for a non-zero pairing of X_(1,-1)^i v or v-bar with a_r (x) a_s."""
    mid = Fraction(-k + kp + p + q, 2)
    return [
        VanishingCase("v, a_r (x) a_0", kp + q, "r", mid),
        VanishingCase("v, a_0 (x) a_s", k - p, "s", mid),
        VanishingCase("vbar, a_p (x) a_s", kp + p, "s", mid),
        VanishingCase("vbar, a_r (x) a_q", k + q, "r", Fraction(-k + kp + p - q, 2)),
    ]


# ─── Ipotesi ─────────────────────────────────────────────────────────────────


def theorem_hypotheses(k: int, kp: int) -> List[Tuple[str, bool]]:
    checks = [
        ("k > k' > 0", k > kp > 0),
        ("k odd", k % 2 == 1),
        ("k' even", kp % 2 == 0),
        ("k != 3", k != 3),
        ("k' != 2", kp != 2),
    ]
    admissible = False
    if k > kp > 0:
        admissible = branching_admissible(BranchQuery.of(k - 1, kp - 1, k, kp))
    checks.append(("(k-1, k'-1) branching-admissible", admissible))
    return checks


def require_hypotheses(k: int, kp: int, names: Optional[Tuple[str, ...]] = None) -> None:
    for name, holds in theorem_hypotheses(k, kp):
        if (names is None or name in names) and not holds:
            raise InputError(f"hypothesis {name} fails for (k, k') = ({k}, {kp})")


SURVIVAL_HYPOTHESES = ("k > k' > 0", "k odd", "k' even")


# ─── Assemblaggio ────────────────────────────────────────────────────────────


def assemble(
    p: int,
    q: int,
    k: int,
    kp: int,
    alpha: Fraction = QUOTED_ALPHA,
    beta3: Fraction = QUOTED_BETA3,
) -> RegulatorExpression:
    """The four terms of the regulator pairing with their integral tokens.

    The prefactors 3/160 and 1/8 are beta3 / 2 and alpha / 2.
    """
    if p < 0 or q < 0:
        raise InputError(f"p and q must be non-negative, got ({p}, {q})")
    if not k >= kp >= 0:
        raise InputError(f"need k >= k' >= 0, got ({k}, {kp})")
    if not branching_admissible(BranchQuery.of(p, q, k, kp)):
        raise InputError(f"hypothesis branching admissibility fails for (p, q, k, k') = ({p}, {q}, {k}, {kp})")

    half_beta = Fraction(beta3) / 2
    half_alpha = Fraction(alpha) / 2

    def sign(e: int) -> int:
        return -1 if e % 2 else 1

    term1 = RegulatorTerm(1, "C1", half_beta / (p + 1), description="sum over j of (-1)^(k'+q+j) C(3,j) A")
    for j in range(4):
        factor = sign(kp + q + j) * comb(3, j) * constant_a(k, kp, kp + q + j, j, strict=False)
        term1.summands.append((factor, IntegralToken(k - q - 2 * j + 4, -k + kp + q, -q - 2)))

    term2 = RegulatorTerm(2, "C2", -sign(k) * half_alpha / (q + 1), description="B_(k-p) - C_(k-p+1)")
    factor2 = constant_b(k, kp, k - p, strict=False) - constant_c(k, kp, k - p + 1, strict=False)
    term2.summands.append((factor2, IntegralToken(kp + p + 3, -p - 2, -k + kp + p)))

    term3 = RegulatorTerm(3, "C3", half_beta / (q + 1), description="sum over j of (-1)^(k'+j) C(3,j) A")
    for j in range(4):
        factor = sign(kp + j) * comb(3, j) * constant_a(k, kp, kp + p + j, j, strict=False)
        term3.summands.append((factor, IntegralToken(k - p - 2 * j + 4, p + 2, -k + kp + p, conjugate=True)))

    term4 = RegulatorTerm(4, "C4", -sign(kp + p + 1) * half_alpha / (q + 1), description="B_(k'+p) - C_(k'-p+1)")
    factor4 = constant_b(k, kp, kp + p, strict=False) - constant_c(k, kp, kp - p + 1, strict=False)
    term4.summands.append((factor4, IntegralToken(k - p + 3, -k + kp - q, q + 2, conjugate=True)))

    return RegulatorExpression(p, q, k, kp, Fraction(beta3), [term1, term2, term3, term4])


# ─── Sopravvivenza ───────────────────────────────────────────────────────────


def survival(k: int, kp: int, beta3: Fraction = QUOTED_BETA3) -> SurvivalReport:
    """Archimedean weight rule applied to every integral token of the assembled expression.

    X^n Psi lies in tau_(k+3, -k'-1), so a token Xi_(n, r, s) vanishes unless
    n + lambda2 + r = 0 and -n + lambda1 + s = 0 with (lambda1, lambda2) =
    (k+3, -k'-1); conjugate tokens use (-k-3, k'+1).
    """
    require_hypotheses(k, kp, SURVIVAL_HYPOTHESES)
    p, q = k - 1, kp - 1
    expression = assemble(p, q, k, kp, beta3=beta3)
    report = SurvivalReport(k, kp)
    for term in expression.terms:
        verdict = TermVerdict(term.index, vanishes=True)
        for _, token in term.summands:
            lam1, lam2 = (-k - 3, kp + 1) if token.conjugate else (k + 3, -kp - 1)
            first = token.n + lam2 + token.r
            second = -token.n + lam1 + token.s
            verdict.witnesses.append((f"{token}: t+lambda2+r", first))
            verdict.witnesses.append((f"{token}: -t+lambda1+s", second))
            if not arch_vanishing(token.n, lam1, lam2, token.r, token.s):
                verdict.vanishes = False
        report.verdicts.append(verdict)
    logger.info("survival (%d, %d): surviving terms %s", k, kp, report.survivors)
    return report


def survival_report(k: int, kp: int) -> VerificationReport:
    report = VerificationReport("survival", citations=[CITATIONS["survival"], CITATIONS["assemble"]])
    result = survival(k, kp)
    for verdict in result.verdicts:
        report.add(f"term {verdict.index} vanishes", verdict.vanishes)
    if result.survivors != [2]:
        report.fail("surviving terms", result.survivors)
    else:
        report.add("surviving term", 2)
    return report


# ─── Accoppiamento normalizzato ──────────────────────────────────────────────


@dataclass(frozen=True)
class NormalizedPairing:
    natural: CycScalar
    quoted: CycScalar

    @property
    def ratio(self) -> CycScalar:
        return self.quoted / self.natural


def normalized_pairing(k: int, kp: int) -> NormalizedPairing:
    """Survivor against a_0 (x) a_q with lambda_1(v) normalized to one."""
    if not k > kp > 0:
        raise InputError(f"need k > k' > 0, got ({k}, {kp})")
    p, q = k - 1, kp - 1
    natural = a_pairing(p, q, p, 0, 0, q)
    sign = -1 if p % 2 else 1
    quoted = TWO_I ** (-k - kp - 2) * sign
    return NormalizedPairing(natural, quoted)


def pairing_witnesses(k: int, kp: int) -> Dict[str, CycScalar]:
    np_ = normalized_pairing(k, kp)
    return {"natural": np_.natural, "quoted": np_.quoted, "ratio": np_.ratio}

