"""Exception types shared across the package."""


class ToricError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(ToricError, ValueError):
    """Input data violates a documented precondition or invariant."""


class InternalInvariantError(ToricError, RuntimeError):
    """An internal consistency check failed; indicates a bug, not bad input."""
