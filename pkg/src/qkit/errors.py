"""Exception hierarchy shared by all qkit modules."""


class QKitError(Exception):
    """Base class for all qkit errors."""


class DomainError(QKitError):
    """An argument lies outside the domain of the requested operation."""


class PoleError(DomainError):
    """Evaluation was requested at (or numerically indistinguishable from) a pole."""


class ConvergenceError(DomainError):
    """A series was evaluated outside its region of convergence."""


class TruncationError(QKitError):
    """A truncated sum or product could not certify its tail bound.

    Carries the bound that was achieved when the term budget ran out.
    """

    def __init__(self, message, achieved_bound=None):
        super().__init__(message)
        self.achieved_bound = achieved_bound


class QuadratureError(QKitError):
    """A quadrature engine failed to converge within its budget.

    Carries the last two successive estimates for diagnostics.
    """

    def __init__(self, message, estimates=None):
        super().__init__(message)
        self.estimates = estimates


class NumericOverflowError(QKitError):
    """An operation produced a non-finite (inf/nan) value."""


class UnsupportedIdentityError(QKitError):
    """The exact oracle does not support this identity/parameter choice."""
