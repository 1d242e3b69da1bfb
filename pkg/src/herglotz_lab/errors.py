"""Exception types shared across the library.

The CLI maps `DomainError` (and subclasses) to exit code 2; numerical
disagreement in a verification run maps to exit code 1.
"""


class HerglotzLabError(Exception):
    """Base class for library errors."""


class DomainError(HerglotzLabError, ValueError):
    """Argument outside the mathematical domain of the operation."""


class PoleError(DomainError):
    """Evaluation requested at (or within working precision of) a pole."""


class DivergenceError(DomainError):
    """The defining series/integral diverges for these arguments."""


class GateError(DomainError):
    """Parameter gate violated (parity / integrality / range precondition)."""


class QuadratureError(HerglotzLabError, RuntimeError):
    """Adaptive integration failed to reach the requested tolerance."""
