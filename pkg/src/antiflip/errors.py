"""Exception types shared by every module."""


class DomainError(ValueError):
    """Input violates a precondition (bad fraction, wrong chain shape, ...)."""


class InvariantError(RuntimeError):
    """An internal consistency check failed; this is a bug, never user error."""
