"""Exception hierarchy shared by every module."""

from __future__ import annotations


class InterlockError(Exception):
    """Base class; ``line`` is set (1-based) when the error comes from parsing input."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class DuplicateVertex(InterlockError, ValueError):
    pass


class SelfLoop(InterlockError, ValueError):
    pass


class DuplicateEdge(InterlockError, ValueError):
    pass


class UnknownVertex(InterlockError, LookupError):
    pass


class ParseError(InterlockError, ValueError):
    pass


class UnsupportedDirected(ParseError):
    pass


class DegenerateNetwork(InterlockError, ValueError):
    pass


class ShapeError(InterlockError, ValueError):
    pass


class UndefinedStatistic(InterlockError, ArithmeticError):
    pass
