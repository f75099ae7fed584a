"""
Eccezioni del toolkit.

Each class extends a builtin so callers that only know ``ValueError`` or
``ZeroDivisionError`` keep working.
"""


class InputError(ValueError):
    """A precondition on user-supplied data is violated (the message names it)."""


class ConstructionError(RuntimeError):
    """An internal consistency check failed. Signals a bug, never bad input."""


class SingularExpansionError(ZeroDivisionError):
    """Power-series expansion requested for a function singular at T=0."""


class DegenerateParameterError(ZeroDivisionError):
    """A numeric instantiation hit a vanishing denominator."""


class PrecisionError(ArithmeticError):
    """Quadrature or truncation did not reach the requested accuracy."""


class UnsupportedArgumentError(ValueError):
    """Argument outside the exactly classifiable set (integers and half-integers)."""
