"""Exception types shared by all modules."""


class WrtError(Exception):
    """Base class for errors raised by this package."""


class ValidationError(WrtError, ValueError):
    """Input parameters violate a stated constraint."""


class DomainError(WrtError, ValueError):
    """An argument lies outside the set an operation is defined on."""


class PoleError(WrtError, ZeroDivisionError):
    """A formula was evaluated at one of its poles."""


class DegenerateError(WrtError, ArithmeticError):
    """A sign decision fell inside the numerical degeneracy band."""


class ConsistencyError(WrtError, RuntimeError):
    """An internal identity failed; this indicates a bug."""
