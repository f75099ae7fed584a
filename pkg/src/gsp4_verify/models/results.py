"""
Dataclasses for gsp4-verify results.

Core functions return these structures instead of printing.
The CLI layer is responsible for formatting and display. Exact values
(Fraction, CycScalar, rational functions) are stored as objects and
turned into strings only by the formatters.
"""

from dataclasses import dataclass, field
from datetime import datetime, timezone
from typing import Any, Dict, List, Optional, Tuple

STATUS_PASS = "pass"
STATUS_FAIL = "fail"
STATUS_SKIPPED = "skipped"

# ─── Verification reports ────────────────────────────────────────────────────


@dataclass
class Witness:
    description: str
    value: Any = None
    error: Optional[float] = None


@dataclass
class VerificationReport:
    check: str
    status: str = STATUS_PASS
    witnesses: List[Witness] = field(default_factory=list)
    citations: List[str] = field(default_factory=list)
    seed: Optional[int] = None
    elapsed_ms: int = 0
    timestamp: str = field(default_factory=lambda: datetime.now(timezone.utc).isoformat())

    @property
    def passed(self) -> bool:
        return self.status == STATUS_PASS

    def add(self, description: str, value: Any = None, error: Optional[float] = None) -> None:
        self.witnesses.append(Witness(description, value, error))

    def fail(self, description: str, value: Any = None, error: Optional[float] = None) -> None:
        """Mark as failed; the first failing witness goes first."""
        if self.status != STATUS_FAIL:
            self.witnesses.insert(0, Witness(description, value, error))
        else:
            self.witnesses.append(Witness(description, value, error))
        self.status = STATUS_FAIL


@dataclass
class NumericResult:
    value: Any
    estimated_error: float = 0.0
    digits: int = 0
    imaginary: float = 0.0
    mode: str = "contour"
    cross_check_error: Optional[float] = None


# ─── Root data ───────────────────────────────────────────────────────────────


@dataclass
class BranchResult:
    p: int
    q: int
    k: int
    kp: int
    admissible: bool
    multiplicity: int

    @property
    def consistent(self) -> bool:
        return self.admissible == (self.multiplicity > 0)


# ─── Representations ─────────────────────────────────────────────────────────


@dataclass
class ScanRow:
    i: int
    pair: Optional[Tuple[int, int]]
    scalar: Any
    nonzero: bool


# ─── Packet and Hodge data ───────────────────────────────────────────────────


@dataclass
class PacketMember:
    label: str
    minimal_k_type: Tuple[int, int]


@dataclass
class PacketInfo:
    highest_weight: Any
    hc_parameter: Tuple[int, int]
    members: List[PacketMember] = field(default_factory=list)

    def k_types(self) -> List[Tuple[int, int]]:
        return [m.minimal_k_type for m in self.members]


@dataclass
class HodgeType:
    pairs: List[Tuple[int, int]]
    t: int

    def sums(self) -> List[int]:
        return [r + s for r, s in self.pairs]

    @property
    def is_swap_stable(self) -> bool:
        return sorted(self.pairs) == sorted((s, r) for r, s in self.pairs)


# ─── Pairing ─────────────────────────────────────────────────────────────────


@dataclass
class PairingConstants:
    k: int
    kp: int
    A: Dict[Tuple[int, int], Any] = field(default_factory=dict)  # noqa: N815
    B: Dict[int, Any] = field(default_factory=dict)  # noqa: N815
    C: Dict[int, Any] = field(default_factory=dict)  # noqa: N815


@dataclass
class IntegralToken:
    """Opaque global integral Xi_(n, r, s) or its conjugate."""

    n: int
    r: int
    s: int
    conjugate: bool = False

    def __str__(self):
        name = "Xibar" if self.conjugate else "Xi"
        return f"{name}_({self.n},{self.r},{self.s})"


@dataclass
class RegulatorTerm:
    index: int
    constant_label: str
    coefficient: Any
    summands: List[Tuple[Any, IntegralToken]] = field(default_factory=list)
    description: str = ""


@dataclass
class RegulatorExpression:
    p: int
    q: int
    k: int
    kp: int
    beta3: Any
    terms: List[RegulatorTerm] = field(default_factory=list)


@dataclass
class TermVerdict:
    index: int
    vanishes: bool
    witnesses: List[Tuple[str, int]] = field(default_factory=list)


@dataclass
class SurvivalReport:
    k: int
    kp: int
    verdicts: List[TermVerdict] = field(default_factory=list)

    @property
    def survivors(self) -> List[int]:
        return [v.index for v in self.verdicts if not v.vanishes]


# ─── Archimedean data ────────────────────────────────────────────────────────


@dataclass(frozen=True)
class MeijerParams:
    a1: Any
    a2: Any
    c1: Any
    c2: Any
    c3: Any
    c4: Any

    @property
    def a(self) -> Tuple[Any, Any]:
        return (self.a1, self.a2)

    @property
    def c(self) -> Tuple[Any, Any, Any, Any]:
        return (self.c1, self.c2, self.c3, self.c4)


@dataclass(frozen=True)
class PiPowerClass:
    pi_exponent: Any
    argument: Any


@dataclass
class GammaClass:
    name: str
    argument: Any
    pi_exponent: Any
    in_numerator: bool = True


@dataclass
class TraceResult:
    k: int
    kp: int
    surviving_term: Optional[int]
    gamma_classes: List[GammaClass] = field(default_factory=list)
    gamma_pi_exponent: Any = None
    pi_exponent: Any = None
    quoted_pi_exponent: Any = None
