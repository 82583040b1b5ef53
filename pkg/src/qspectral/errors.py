"""Exception types shared across the package."""


class QSpectralError(Exception):
    """Base class for all package-specific errors."""


class InvalidParameterError(QSpectralError, ValueError):
    """A constructor or closed-form operation was called outside its domain."""


class PreconditionError(QSpectralError, ValueError):
    """A structural precondition (apex present, index in range, ...) failed."""


class NotFoundError(QSpectralError, LookupError):
    """A vertex or edge named by the caller does not exist."""


class OutOfScopeError(QSpectralError, ValueError):
    """Input lies outside the degree range a formula was derived for."""


class UnsupportedOrderError(QSpectralError, ValueError):
    """Graph order exceeds what the exhaustive machinery supports."""


class NumericError(QSpectralError, RuntimeError):
    """An iteration failed to converge or a root bracket lost its sign change."""


class Graph6ParseError(QSpectralError, ValueError):
    """Malformed graph6 input; carries the offending byte offset."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset
