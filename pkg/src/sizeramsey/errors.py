"""Exception hierarchy shared by every module of the engine."""

from __future__ import annotations


class SizeRamseyError(Exception):
    """Base class for all engine errors."""


class InvalidParameter(SizeRamseyError, ValueError):
    pass


class CapacityExceeded(SizeRamseyError, ValueError):
    """A graph would need more than 64 vertices."""


class Graph6Error(SizeRamseyError, ValueError):
    pass


class MalformedHeader(Graph6Error):
    pass


class TrailingGarbage(Graph6Error):
    pass


class VertexCountExceeds64(Graph6Error):
    pass


class BudgetExceeded(SizeRamseyError):
    """A brute-force or enumeration budget would be exceeded.

    The engine refuses instead of silently approximating.
    """


class PartitionMismatch(SizeRamseyError, ValueError):
    """Red and blue edge sets do not partition the host's edges."""


class InvalidComponent(SizeRamseyError, ValueError):
    pass


class RefutedLowerBound(SizeRamseyError):
    """Some graph of the swept size arrows, contradicting the claimed bound."""

    def __init__(self, message: str, graph=None):
        super().__init__(message)
        self.graph = graph


class LemmaViolated(SizeRamseyError):
    def __init__(self, message: str, graph=None):
        super().__init__(message)
        self.graph = graph


class PatternSyntaxError(SizeRamseyError, ValueError):
    pass
