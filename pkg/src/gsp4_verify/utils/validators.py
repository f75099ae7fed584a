"""
Validatori di input per gsp4-verify.

Ogni validatore ritorna ``(True, None)`` se l'input è accettabile,
``(False, messaggio)`` altrimenti; il chiamante decide se sollevare
``InputError`` o uscire con codice 2.
"""

from pathlib import Path
from typing import Optional, Tuple

# Cifre minime e massime per il lavoro numerico
MIN_DIGITS = 15
MAX_DIGITS = 200


def validate_dominant(k: int, kp: int) -> Tuple[bool, Optional[str]]:
    if not k >= kp >= 0:
        return False, f"k >= k' >= 0 fails: (k, k') = ({k}, {kp})"
    return True, None


def validate_weight(k: int, kp: int, c: int) -> Tuple[bool, Optional[str]]:
    """Peso dominante con k + k' = c (mod 2)."""
    ok, reason = validate_dominant(k, kp)
    if not ok:
        return ok, reason
    if (k + kp - c) % 2:
        return False, f"k + k' = c (mod 2) fails: k + k' = {k + kp}, c = {c}"
    return True, None


def validate_pq(p: int, q: int) -> Tuple[bool, Optional[str]]:
    if p < 0 or q < 0:
        return False, f"p, q >= 0 fails: (p, q) = ({p}, {q})"
    return True, None


def validate_parity(p: int, q: int, r: int, s: int) -> Tuple[bool, Optional[str]]:
    """r = p e s = q modulo 2."""
    if (r - p) % 2 or (s - q) % 2:
        return False, f"r = p and s = q (mod 2) fails: (p, q, r, s) = ({p}, {q}, {r}, {s})"
    return True, None


def validate_digits(digits: int) -> Tuple[bool, Optional[str]]:
    if not MIN_DIGITS <= digits <= MAX_DIGITS:
        return False, f"precision digits must lie in {MIN_DIGITS}..{MAX_DIGITS}, got {digits}"
    return True, None


def validate_safe_path(file_path: str) -> Tuple[bool, Optional[str]]:
    """Percorso di output risolvibile, con directory padre esistente."""
    try:
        resolved = Path(file_path).resolve()
    except (OSError, ValueError) as e:
        return False, f"Percorso non valido: {e}"

    if not resolved.parent.is_dir():
        return False, f"Directory inesistente: {resolved.parent}"

    return True, None
