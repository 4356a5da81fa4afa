"""Shared exception types."""


class ParseError(ValueError):
    """Malformed polynomial or problem-file text.

    `position` is a 0-based offset into the parsed string when known; the
    problem-file loader additionally sets `line` (1-based).
    """

    def __init__(self, message, position=None, line=None):
        super().__init__(message)
        self.position = position
        self.line = line


class RingMismatch(ValueError):
    """Operands live in different ambient rings."""


class RegularSequenceError(ValueError):
    """The given forms do not define a graded complete intersection."""


class ResourceLimit(RuntimeError):
    """A configured cap (denominator exponent, matrix width) was exceeded."""
