"""Exception hierarchy shared by all nlvcodec modules."""


class NlvError(Exception):
    """Base class for all nlvcodec errors."""


class EmptyArrayError(NlvError, ValueError):
    """Raised when an empty array is passed where n >= 1 is required."""


class RangeError(NlvError, IndexError):
    """Raised when a query or argument index is outside its valid range."""


class ParseError(NlvError, ValueError):
    """Raised when input text cannot be parsed as an integer array."""


class PreconditionError(NlvError, ValueError):
    """Raised when an encoder precondition fails (e.g. consecutive equal
    elements under a scheme that forbids them).

    ``index`` points at the offending position when one exists.
    """

    def __init__(self, message, index=None):
        super().__init__(message)
        self.index = index


class CorruptionError(NlvError, ValueError):
    """Raised when a bitstream or container cannot be decoded."""
