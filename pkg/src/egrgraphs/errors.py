"""Exception hierarchy shared by every module.

The CLI maps each class onto a fixed exit code, so library code raises the
most specific class that applies.
"""


class EgrError(Exception):
    """Base class for all errors raised by egrgraphs."""


class ParameterError(EgrError, ValueError):
    """An argument is outside the operation's domain (bad q, bad k, ...)."""


class DomainError(EgrError, ValueError):
    """The input is well formed but the operation is undefined on it."""


class ResourceError(EgrError):
    """The request exceeds a configured desk-scale limit."""


class ParseError(EgrError, ValueError):
    """Malformed serialized graph data."""

    def __init__(self, message, offset=None):
        if offset is not None:
            message = f"{message} (at offset {offset})"
        super().__init__(message)
        self.offset = offset


class InvariantError(EgrError, AssertionError):
    """An internal consistency check failed; indicates a bug or bad convention."""
