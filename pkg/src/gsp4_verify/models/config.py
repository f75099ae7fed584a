"""
Centralized configuration for gsp4-verify.

Tolerances, size bounds, grid limits, quoted constants and the citation
table live here so that core modules, CLI and tests share one source.
"""

from fractions import Fraction

# ─── Precisione ──────────────────────────────────────────────────────────────

DEFAULT_PRECISION_DIGITS = 30
# Cifre extra per i controlli interni di convergenza
GUARD_DIGITS = 10

REPORT_TOLERANCE = 1e-8
DUAL_METHOD_TOLERANCE = 1e-10
CONVERGENCE_TOLERANCE = 1e-10
GAMMA_TOLERANCE = 1e-12
REALITY_TOLERANCE = 1e-12

# ─── Representation bounds ───────────────────────────────────────────────────

# k + k' upper bound for explicit module construction
DEFAULT_MAX_DEGREE = 12

# ─── Acceptance grids ────────────────────────────────────────────────────────

BRANCH_GRID_MAX = 8
REP_GRID_MAX = 8
SCAN_GRID_MAX = 10
CONSTANTS_GRID_MAX = 20
MELLIN_GRID_MAX = 16
TRACE_GRID_MAX = 20
BESSEL_MAX_M = 10
UNRAMIFIED_ORDER = 25
NUMERIC_SAMPLES = 20
TATE_SERIES_DEPTH = 30
MEIJER_RANDOM_SETS = 20

# Bounds used by `gsp4v verify --quick`
QUICK_GRIDS = {
    "branch": 5,
    "rep": 5,
    "scan": 7,
    "constants": 10,
    "mellin": 11,
    "trace": 13,
    "bessel": 5,
    "order": 10,
    "samples": 5,
}

# Tate tuples (p, q, r, s) with r = p, s = q mod 2
TATE_GRID = [
    (1, 1, 1, 1),
    (1, 1, -1, 1),
    (2, 1, 0, 1),
    (2, 2, 2, -2),
    (3, 1, 1, -1),
    (4, 1, -2, 1),
    (4, 3, 0, 3),
    (6, 3, -8, 3),
    (5, 2, 3, 0),
    (8, 3, 2, -1),
]

# ─── Quoted constants ────────────────────────────────────────────────────────

QUOTED_ALPHA = Fraction(1, 4)
QUOTED_BETA3 = Fraction(3, 80)
QUOTED_GAMMA = Fraction(0)
QUOTED_PI_EXPONENT = Fraction(-2)

# (2 pi i)^2 in the denominator of the Betti period
PERIOD_PI_EXPONENT = Fraction(-2)

# ─── Exit codes ──────────────────────────────────────────────────────────────

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_INPUT = 2

OUTPUT_FORMATS = ("text", "json", "csv", "rich")

# ─── Citation table ──────────────────────────────────────────────────────────

CITATIONS = {
    "branching": "branching law to GL(2) x GL(2): five inequality cases",
    "weyl-dimension": "Weyl dimension formula for C2",
    "irrep": "irreducible algebraic representation as a direct factor of a tensor power of the standard one",
    "cayley": "Cayley transport: Jw has compact weight lambda'(u, u', c)",
    "ktype": "standard basis of tau_(a,b) and the raising-lowering identity",
    "wedge": "K-type decomposition of Lambda^2 p+ (x) p-",
    "lambda-scan": "non-vanishing of the isotypic component of X_(1,-1) v",
    "packet": "discrete series L-packet and minimal K-types",
    "hodge": "Hodge decomposition of the interior cohomology",
    "ranks": "ranks of the Betti, de Rham and extension spaces in the stable case",
    "constants": "factorial constants A, B, C of the standard-basis action",
    "projection": "projection coefficients onto tau_(3,-1)",
    "assemble": "four-term expression of the regulator pairing",
    "survival": "archimedean vanishing kills all terms but one",
    "unramified": "unramified local integral: two Hecke factors times the spin L-factor",
    "antisymmetrizer": "alternating-sum formula for unramified Bessel values",
    "tate-unramified": "unramified Tate integral equals one Euler factor",
    "tate-arch": "archimedean Tate integral of a Gaussian-weighted test function",
    "meijer": "archimedean Bessel function as a Meijer G-function",
    "mellin": "Mellin inversion of the Meijer G-function",
    "gamma": "gamma values at positive integers and half-integers",
    "trace": "power of pi in the regulator / L-value comparison",
}
