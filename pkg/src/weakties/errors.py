"""Exception types shared across the package."""


class WeaktiesError(Exception):
    """Base class for all errors raised by this package."""


class GraphError(WeaktiesError):
    """Invalid graph construction input (self-loop, bad weight, unknown node)."""


class ParseError(WeaktiesError):
    """Malformed input data; carries the 1-based line number when known."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
