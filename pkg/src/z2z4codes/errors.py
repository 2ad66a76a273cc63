"""Exception types shared across the library, the service and the CLI."""

from __future__ import annotations


class Z2Z4Error(Exception):
    """Base class for all library errors."""


class ParseError(Z2Z4Error):
    """Malformed code file or vector literal."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class PreconditionError(Z2Z4Error):
    """An operation was called outside its contract."""


class ShapeMismatch(PreconditionError):
    """Two vectors with different (alpha, beta) were combined."""


class NotInRing(PreconditionError):
    """A polynomial admits no exact decomposition in the requested ring."""


class InconsistentEnumerator(PreconditionError):
    """A transform produced non-integer coefficients for a claimed code size."""


class GuardExceeded(Z2Z4Error):
    """The ambient space is larger than the enumeration guard allows."""
