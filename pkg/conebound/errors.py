"""errors.py - Exceptions raised by the conebound package."""


class ConeboundError(Exception):
    """Base class for every error raised by conebound."""


class RegimeViolation(ConeboundError, ValueError):
    """The exponent pair does not satisfy the requested regime."""

    def __init__(self, constraint: str, message: str):
        super().__init__(message)
        self.constraint = constraint


class DomainError(ConeboundError, ValueError):
    """An argument lies outside a function's domain."""


class IndexOutOfRange(ConeboundError, IndexError):
    """A step index fell outside 1..n."""


class SizeError(ConeboundError, ValueError):
    """A requested truncation size is not positive."""


class KindError(ConeboundError, TypeError):
    """The operation is not defined for this family kind."""


class NotCovered(ConeboundError, LookupError):
    """No published theorem certifies a constant for this configuration."""


class ZeroVector(ConeboundError, ValueError):
    """A ratio was requested for the zero vector."""


class DivergentSeries(ConeboundError, ArithmeticError):
    """The requested series does not converge."""


class UnknownInequality(ConeboundError, LookupError):
    """The inequality identifier is not in the registry."""


class MatrixFileError(ConeboundError, ValueError):
    """A matrix file is unreadable, ragged, negative or non-finite."""
