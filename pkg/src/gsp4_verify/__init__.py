"""
gsp4-verify: exact and numeric checks for the regulator / L-value
comparison on GSp(4).

Uso programmatico::

    from gsp4_verify import run_trace, verify_unramified
    print(run_trace(7, 4).pi_exponent)
    print(verify_unramified(25).status)
"""

__version__ = "1.0.0"

# ─── API pubblica ────────────────────────────────────────────────────────────

from gsp4_verify.core.archimedean import (
    arch_vanishing,
    bessel_radial,
    meijer_g,
    meijer_params,
    mellin_verify,
    pi_power_class,
    tate_arch_verify,
)
from gsp4_verify.core.packet import hodge_types, lpacket, stable_ranks
from gsp4_verify.core.pairing import assemble, constants, projection_coeffs, survival
from gsp4_verify.core.registry import CheckRegistry, VerificationCheck
from gsp4_verify.core.reps import build_irrep, isotypic_project, lambda_scan
from gsp4_verify.core.roots import BranchQuery, Weight, branching_admissible, branching_multiplicity
from gsp4_verify.core.trace import run_trace, trace_pi_exponent
from gsp4_verify.core.unramified import bessel_value, spin_lfactor, verify_unramified
from gsp4_verify.core.wedge import wedge_decompose
from gsp4_verify.models.results import (
    MeijerParams,
    NumericResult,
    RegulatorExpression,
    TraceResult,
    VerificationReport,
    Witness,
)

__all__ = [
    # Versione
    "__version__",
    # Dati di radice e rappresentazioni
    "Weight",
    "BranchQuery",
    "branching_admissible",
    "branching_multiplicity",
    "build_irrep",
    "isotypic_project",
    "lambda_scan",
    "wedge_decompose",
    # Pacchetto e Hodge
    "lpacket",
    "hodge_types",
    "stable_ranks",
    # Accoppiamento
    "constants",
    "projection_coeffs",
    "assemble",
    "survival",
    # Teoria locale
    "spin_lfactor",
    "bessel_value",
    "verify_unramified",
    "meijer_params",
    "arch_vanishing",
    "meijer_g",
    "mellin_verify",
    "bessel_radial",
    "tate_arch_verify",
    "pi_power_class",
    "run_trace",
    "trace_pi_exponent",
    # Plugin system
    "CheckRegistry",
    "VerificationCheck",
    # Dataclass risultati
    "VerificationReport",
    "Witness",
    "NumericResult",
    "MeijerParams",
    "RegulatorExpression",
    "TraceResult",
]
