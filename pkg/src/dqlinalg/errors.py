"""Exception hierarchy for dual quaternion linear algebra."""


class DQError(Exception):
    """Base class for all library errors."""


class NotRepresentable(DQError):
    """The requested value has no dual-number representation."""


class NegativeArgument(DQError):
    pass


class Singular(DQError):
    """Inversion of an infinitesimal (non-appreciable) value."""


class DimensionMismatch(DQError, ValueError):
    pass


class NotSquare(DimensionMismatch):
    pass


class NotHermitian(DQError, ValueError):
    pass


class ConvergenceFailure(DQError, ArithmeticError):
    """An iterative kernel hit its sweep cap before converging."""


class IllConditionedGap(DQError, ArithmeticError):
    """Two spectral clusters are too close to separate reliably.

    Raise ``cluster_tol`` so that the two clusters merge.
    """


class PreconditionViolated(DQError, ValueError):
    pass


class BadK(DQError, ValueError):
    pass


class ParseError(DQError, ValueError):
    pass
