"""Exception hierarchy shared by all modules."""


class SpinvolError(Exception):
    """Base class for all library errors."""


class DomainError(SpinvolError, ValueError):
    """Input violates a mathematical precondition (triangle, closure, parity)."""


class OracleBoundError(DomainError):
    """A brute-force oracle was asked for spins beyond its tractable bound."""


class NonCanonicalError(SpinvolError):
    """Canonicalization left a residual that breaks the diagonal-range rules.

    Carries both quadruples so the caller can see what was attempted.
    """

    def __init__(self, message, original=None, candidate=None):
        super().__init__(message)
        self.original = original
        self.candidate = candidate


class RadicalMismatchError(SpinvolError, ArithmeticError):
    """Addition of radical values with different radical multisets.

    This is a hard failure by design: exact identity checks must never
    silently degrade to floating point.
    """


class ConvergenceError(SpinvolError):
    """An iterative numerical routine failed to converge."""
