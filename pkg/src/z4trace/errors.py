"""Exception types raised across the package."""


class Z4TraceError(Exception):
    """Base class for all package errors."""


class NotPrimitive(Z4TraceError):
    """Polynomial is reducible or its root does not generate the multiplicative group."""


class NotQuadratic(Z4TraceError):
    """Boolean function whose polar form is not bilinear."""


class EmptySupport(Z4TraceError):
    """A defining set was requested from the zero function."""


class BudgetExceeded(Z4TraceError):
    """Exhaustive enumeration would exceed the configured work budget."""


class EmptyCode(Z4TraceError):
    """Minimum distance requested for a code with fewer than two words."""


class VerificationFailed(Z4TraceError):
    """A closed-form identity failed; ``witness`` holds the offending input."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness
