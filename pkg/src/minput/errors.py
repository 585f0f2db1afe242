"""Exception types shared across the package."""


class MinputError(Exception):
    """Base class for all errors raised by this package."""


class IndexOutOfRange(MinputError, IndexError):
    """A vertex id or matrix entry lies outside [0, n)."""


class ParseError(MinputError, ValueError):
    """An input file is malformed.

    Attributes
    ----------
    line : int or None
        1-based line number where parsing failed, when known.
    """

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class NotSquare(MinputError, ValueError):
    """A matrix that must be square is not."""


class BoundExceeded(MinputError, RuntimeError):
    """A brute-force oracle was invoked above its instance-size bound."""


class IterationBoundExceeded(MinputError, RuntimeError):
    """The augmentation loop ran past its theoretical iteration bound.

    This indicates an internal bug, not a property of the instance.
    """
