"""
Built-in verification checks, one per acceptance criterion.

Every check accepts ``quick``, ``seed``, ``digits`` and ``grid_max`` keyword arguments
and returns a single VerificationReport; grids are walked in sorted order.
"""

import logging
from dataclasses import dataclass
from math import comb, factorial
from typing import Callable, Iterable, List, Optional, Tuple

from gsp4_verify.core.archimedean import (
    mellin_grid,
    mellin_verify,
    survivor_params,
    tate_arch_verify,
    verify_gamma,
    verify_meijer_dual,
)
from gsp4_verify.core.pairing import assemble, constants, theorem_hypotheses, verify_projection_coeffs
from gsp4_verify.core.registry import CheckRegistry
from gsp4_verify.core.reps import build_irrep, check_brackets, lambda_scan, seed_is_highest_weight
from gsp4_verify.core.roots import (
    BranchQuery,
    Weight,
    branching_admissible,
    branching_decomposition,
    dominant_pairs,
    weyl_dimension,
    weyl_group,
)
from gsp4_verify.core.trace import run_trace
from gsp4_verify.core.unramified import verify_bessel_values, verify_unramified
from gsp4_verify.core.wedge import wedge_decompose
from gsp4_verify.models.config import (
    BESSEL_MAX_M,
    BRANCH_GRID_MAX,
    CITATIONS,
    CONSTANTS_GRID_MAX,
    DEFAULT_PRECISION_DIGITS,
    MELLIN_GRID_MAX,
    NUMERIC_SAMPLES,
    QUICK_GRIDS,
    QUOTED_PI_EXPONENT,
    REP_GRID_MAX,
    SCAN_GRID_MAX,
    TATE_GRID,
    TRACE_GRID_MAX,
    UNRAMIFIED_ORDER,
)
from gsp4_verify.models.results import VerificationReport

logger = logging.getLogger(__name__)


@dataclass
class BuiltinCheck:
    name: str
    description: str
    runner: Callable[..., VerificationReport]

    def run(self, **kwargs) -> VerificationReport:
        return self.runner(**kwargs)


def _bound(full: int, key: str, quick: bool) -> int:
    return QUICK_GRIDS[key] if quick else full


def _absorb(report: VerificationReport, label: str, sub: VerificationReport) -> None:
    """Fold a sub-report into ``report``: only its first witness on success, all of them on failure."""
    if sub.passed:
        first = sub.witnesses[0] if sub.witnesses else None
        report.add(label, first.value if first else None, first.error if first else None)
        return
    for w in sub.witnesses:
        report.fail(f"{label}: {w.description}", w.value, w.error)


def theorem_pairs(max_sum: int) -> List[Tuple[int, int]]:
    """(k, k') with every theorem hypothesis true and k + k' <= max_sum."""
    pairs = []
    for k, kp in dominant_pairs(max_sum):
        if all(holds for _, holds in theorem_hypotheses(k, kp)):
            pairs.append((k, kp))
    return sorted(pairs)


# ─── Checks ──────────────────────────────────────────────────────────────────


def check_unramified(quick: bool = False, seed: Optional[int] = None, **_) -> VerificationReport:
    order = _bound(UNRAMIFIED_ORDER, "order", quick)
    samples = _bound(NUMERIC_SAMPLES, "samples", quick)
    return verify_unramified(order, numeric=True, seed=seed, samples=samples)


def check_projection(**_) -> VerificationReport:
    return verify_projection_coeffs()


def check_branching(quick: bool = False, **_) -> VerificationReport:
    """Inequality list against character-theoretic multiplicities."""
    report = VerificationReport("branching-oracle", citations=[CITATIONS["branching"]])
    count = 0
    for k, kp in dominant_pairs(_bound(BRANCH_GRID_MAX, "branch", quick)):
        for p in range(k + kp + 1):
            for q in range(k + kp - p + 1):
                if (k + kp - p - q) % 2:
                    continue
                bq = BranchQuery.of(p, q, k, kp)
                admissible = branching_admissible(bq)
                multiplicity = branching_decomposition(bq.w).get((p, q), 0)
                count += 1
                if admissible != (multiplicity > 0):
                    report.fail(f"(p, q, k, k') = {(p, q, k, kp)}: admissible={admissible}", multiplicity)
    if report.passed:
        report.add("queries agreeing with the character oracle", count)
    return report


def _weyl_symmetric(multiplicities) -> bool:
    for w in weyl_group():
        (a, b), (c, d) = w.matrix
        for (u, up), m in multiplicities.items():
            if multiplicities.get((a * u + b * up, c * u + d * up), 0) != m:
                return False
    return True


def check_representations(quick: bool = False, **_) -> VerificationReport:
    report = VerificationReport("rep-construction", citations=[CITATIONS["irrep"], CITATIONS["weyl-dimension"]])
    for k, kp in dominant_pairs(_bound(REP_GRID_MAX, "rep", quick)):
        lam = Weight(k, kp, (k + kp) % 2)
        module = build_irrep(lam)
        expected = weyl_dimension(lam)
        if module.dimension != expected:
            report.fail(f"dim {lam}", module.dimension, expected)
        elif not seed_is_highest_weight(k, kp):
            report.fail(f"seed of {lam} not killed by the raising operators")
        elif not _weyl_symmetric(module.weight_multiplicities()):
            report.fail(f"weight multiplicities of {lam} not Weyl-symmetric")
        elif not check_brackets(module):
            report.fail(f"bracket relations fail on {lam}")
        else:
            report.add(f"dim {lam}", expected)
    return report


def check_lambda_scan(quick: bool = False, **_) -> VerificationReport:
    report = VerificationReport("lambda-scan", citations=[CITATIONS["lambda-scan"], CITATIONS["cayley"]])
    bound = _bound(SCAN_GRID_MAX, "scan", quick)
    for k, kp in dominant_pairs(bound):
        if not k > kp > 0:
            continue
        row = lambda_scan(k, kp, (1,))[0]
        if row.nonzero:
            report.add(f"(k, k') = ({k}, {kp}): lambda_1(v) at {row.pair}", row.scalar)
        else:
            report.fail(f"(k, k') = ({k}, {kp}): isotypic component of X_(1,-1) v is zero", row.pair)
    return report


def _naive_a(n: int, i: int, j: int) -> int:
    return (
        factorial(n + 4 - i) // factorial(n + 4 - i - j)
        * factorial(i + j) // factorial(i - j)
        * factorial(n - i + j) // factorial(n - i)
    )


def _quoted_triples(p: int, q: int, k: int, kp: int) -> List[List[Tuple[int, int, int, bool]]]:
    return [
        [(k - q - 2 * j + 4, -k + kp + q, -q - 2, False) for j in range(4)],
        [(kp + p + 3, -p - 2, -k + kp + p, False)],
        [(k - p - 2 * j + 4, p + 2, -k + kp + p, True) for j in range(4)],
        [(k - p + 3, -k + kp - q, q + 2, True)],
    ]


def check_pairing_constants(quick: bool = False, **_) -> VerificationReport:
    report = VerificationReport("pairing-constants", citations=[CITATIONS["constants"], CITATIONS["assemble"]])
    bound = _bound(CONSTANTS_GRID_MAX, "constants", quick)
    for k, kp in dominant_pairs(bound):
        table = constants(k, kp)
        n = k + kp
        for (i, j), value in sorted(table.A.items()):
            if value != _naive_a(n, i, j):
                report.fail(f"A_({i},{j}) for ({k}, {kp})", value, _naive_a(n, i, j))
        for i, value in sorted(table.B.items()):
            naive = factorial(i + 1) // factorial(i) * factorial(n + 4 - i) // factorial(n + 3 - i)
            if value != naive:
                report.fail(f"B_{i} for ({k}, {kp})", value, naive)
        for i, value in sorted(table.C.items()):
            naive = comb(i, 1) * (factorial(n - i + 1) // factorial(n - i))
            if value != naive:
                report.fail(f"C_{i} for ({k}, {kp})", value, naive)

    for k, kp in dominant_pairs(bound):
        if not (k > kp > 0 and k % 2 == 1 and kp % 2 == 0):
            continue
        p, q = k - 1, kp - 1
        expression = assemble(p, q, k, kp)
        got = [[(t.n, t.r, t.s, t.conjugate) for _, t in term.summands] for term in expression.terms]
        if got != _quoted_triples(p, q, k, kp):
            report.fail(f"index triples for ({k}, {kp})", got)
    if report.passed:
        report.add("constants and index triples checked up to k + k'", bound)
    return report


def check_mellin(
    quick: bool = False, digits: int = DEFAULT_PRECISION_DIGITS, grid_max: int = MELLIN_GRID_MAX, **_
) -> VerificationReport:
    """Mellin identity on every survivor with k + k' <= grid_max."""
    report = VerificationReport("mellin-grid", citations=[CITATIONS["mellin"], CITATIONS["meijer"]])
    for k, kp in mellin_grid(_bound(grid_max, "mellin", quick)):
        sub = mellin_verify(survivor_params(k, kp), k - 1, kp - 1, digits)
        _absorb(report, f"(k, k') = ({k}, {kp})", sub)
    return report


def check_tate_arch(digits: int = DEFAULT_PRECISION_DIGITS, **_) -> VerificationReport:
    report = VerificationReport("tate-arch-grid", citations=[CITATIONS["tate-arch"]])
    for p, q, r, s in sorted(TATE_GRID):
        sub = tate_arch_verify(p, q, r, s, digits)
        label = f"(p, q, r, s) = {(p, q, r, s)}"
        if sub.passed:
            report.add(label, sub.witnesses[2].value)
        else:
            _absorb(report, label, sub)
    return report


def check_trace(quick: bool = False, **_) -> VerificationReport:
    report = VerificationReport(
        "trace-grid", citations=[CITATIONS["trace"], CITATIONS["survival"], CITATIONS["gamma"]]
    )
    for k, kp in theorem_pairs(_bound(TRACE_GRID_MAX, "trace", quick)):
        result = run_trace(k, kp)
        halves = sorted(g.name for g in result.gamma_classes if g.pi_exponent)
        label = f"(k, k') = ({k}, {kp})"
        if result.pi_exponent != QUOTED_PI_EXPONENT:
            report.fail(
                f"{label}: net pi exponent {result.pi_exponent}, quoted {QUOTED_PI_EXPONENT}; half-integral {halves}",
                result.pi_exponent,
            )
        else:
            report.add(label, result.pi_exponent)
    return report


def check_bessel(quick: bool = False, **_) -> VerificationReport:
    return verify_bessel_values(_bound(BESSEL_MAX_M, "bessel", quick))


def check_wedge(**_) -> VerificationReport:
    report = VerificationReport("wedge-decomposition", citations=[CITATIONS["wedge"]])
    expected = {
        (2, 1): ["tau(3,-1)", "tau(2,0)", "tau(1,1)"],
        (1, 2): ["tau(1,-3)", "tau(0,-2)", "tau(-1,-1)"],
        (3, 0): ["tau(3,3)"],
        (0, 3): ["tau(-3,-3)"],
    }
    for pattern, labels in sorted(expected.items()):
        got = wedge_decompose(pattern).labels()
        if sorted(got) != sorted(labels):
            report.fail(f"pattern {pattern}", got, None)
        else:
            report.add(f"pattern {pattern}", got)
    return report


def check_gamma(digits: int = DEFAULT_PRECISION_DIGITS, **_) -> VerificationReport:
    return verify_gamma(digits=digits)


def check_meijer_dual(
    quick: bool = False, seed: Optional[int] = None, digits: int = DEFAULT_PRECISION_DIGITS, **_
) -> VerificationReport:
    return verify_meijer_dual(sets=5 if quick else 20, seed=seed, digits=digits)


BUILTIN_CHECKS: Iterable[BuiltinCheck] = (
    BuiltinCheck("unramified-identity", "Bessel series equals the spin L-factor expansion", check_unramified),
    BuiltinCheck("projection-coefficients", "alpha, beta3, gamma against the quoted values", check_projection),
    BuiltinCheck("branching-oracle", "inequality list against character multiplicities", check_branching),
    BuiltinCheck("rep-construction", "built dimensions, seeds, Weyl symmetry, brackets", check_representations),
    BuiltinCheck("lambda-scan", "non-vanishing isotypic component of X_(1,-1) v", check_lambda_scan),
    BuiltinCheck("pairing-constants", "A, B, C against factorials; assembled index triples", check_pairing_constants),
    BuiltinCheck("mellin-grid", "Mellin transform of G against the gamma product", check_mellin),
    BuiltinCheck("tate-arch-grid", "archimedean Tate products against the quoted value", check_tate_arch),
    BuiltinCheck("trace-grid", "single survivor and net power of pi", check_trace),
    BuiltinCheck("bessel-values", "c_m = h_m(alpha_1..alpha_4)", check_bessel),
    BuiltinCheck("wedge-decomposition", "K-types of the wedge spaces", check_wedge),
    BuiltinCheck("gamma", "gamma at integers and half-integers", check_gamma),
    BuiltinCheck("meijer-dual", "contour against residue series", check_meijer_dual),
)


def register_builtin_checks() -> None:
    """Registra i check built-in; idempotente."""
    for check in BUILTIN_CHECKS:
        if CheckRegistry.get(check.name) is None:
            CheckRegistry.register(check)
