"""Exception hierarchy shared by every module."""


class CoxtourError(Exception):
    """Base class for all library errors."""


class UnsupportedTypeError(CoxtourError, ValueError):
    """Operation is not defined for the given root system type."""


class InfeasibleError(CoxtourError, ValueError):
    """Input lies outside the set the operation can realize."""


class BoundaryError(InfeasibleError):
    """Input is feasible but not in the strict interior."""


class PreconditionError(CoxtourError, ValueError):
    """A structural precondition (e.g. balance) does not hold."""


class ComplexityError(CoxtourError, ValueError):
    """Instance exceeds a configured size cap."""


class EdgeNotFoundError(CoxtourError, KeyError):
    pass


class ConvergenceError(CoxtourError, RuntimeError):
    def __init__(self, message: str, residual: float):
        super().__init__(message)
        self.residual = residual
