"""Exception hierarchy shared by all modules.

Every error raised on purpose derives from :class:`ProjmetError`.  The CLI
maps :class:`BudgetExceeded` to exit status 2 and everything else to 1.
"""
from __future__ import annotations


class ProjmetError(Exception):
    """Base class for domain errors."""


class BudgetExceeded(ProjmetError):
    """An exhaustive operation would exceed the configured state budget."""


class FieldError(ProjmetError, ValueError):
    pass


class NotPrime(FieldError):
    pass


class ReducibleModulus(FieldError):
    pass


class FieldTooLarge(FieldError):
    pass


class FieldMismatch(FieldError):
    pass


class DivisionByZero(FieldError, ZeroDivisionError):
    pass


class DimensionMismatch(ProjmetError, ValueError):
    pass


class DependentBasis(ProjmetError, ValueError):
    pass


class NotSpanning(ProjmetError, ValueError):
    pass


class ShapeMismatch(ProjmetError, ValueError):
    pass


class NotSurjective(ProjmetError, ValueError):
    pass


class DistanceTooSmall(ProjmetError, ValueError):
    pass


class NotIsometry(ProjmetError, ValueError):
    pass


class PreconditionFailed(ProjmetError, ValueError):
    pass


class HypothesisFailed(ProjmetError):
    """A theorem hypothesis does not hold for the given input."""


class InvalidWeight(ProjmetError, ValueError):
    """A weight table violates a metric axiom."""


class EmptyFamily(ProjmetError, ValueError):
    pass


class NotInSpan(ProjmetError, ValueError):
    pass


class VerificationFailed(ProjmetError):
    """A construction failed its own self-check."""


class TriangleViolated(InvalidWeight):
    pass
