"""Shared exception types."""


class DegreeMismatchError(ValueError):
    """Operands have different degrees."""


class ValidationError(ValueError):
    """Malformed input data (overlapping blocks, bad vertex, unknown name)."""


class ResourceCapError(RuntimeError):
    """A configured size cap would be exceeded."""

    def __init__(self, message, cap=None):
        super().__init__(message)
        self.cap = cap


class StateError(RuntimeError):
    """Operation called on an object whose preconditions do not hold."""
