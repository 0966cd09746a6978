"""Exception types raised across the package."""

from __future__ import annotations


class HochgraphError(Exception):
    """Base class for all errors raised by hochgraph."""


class OutOfRangeVertex(HochgraphError, ValueError):
    pass


class SelfLoopForbidden(HochgraphError, ValueError):
    pass


class LoopsPresent(HochgraphError, ValueError):
    pass


class NegativeDimension(HochgraphError, ValueError):
    pass


class NotAcyclic(HochgraphError, ValueError):
    """The input digraph has an oriented cycle.

    ``cycle`` holds one witnessing cycle as a vertex list (first vertex not
    repeated at the end) when the caller could cheaply find one.
    """

    def __init__(self, message: str = "digraph has an oriented cycle", cycle=None):
        super().__init__(message)
        self.cycle = list(cycle) if cycle is not None else None


class NotAcyclicAtStage(NotAcyclic):
    def __init__(self, t: float, cycle=None):
        super().__init__(f"connectivity digraph has an oriented cycle at t={t!r}", cycle)
        self.t = t


class CycleCapExceeded(HochgraphError, RuntimeError):
    def __init__(self, cap: int):
        super().__init__(f"more than {cap} simple cycles")
        self.cap = cap


class NegativeMultiplicity(HochgraphError, ValueError):
    pass


class ParseError(HochgraphError, ValueError):
    pass


class CycleTooSmall(HochgraphError, ValueError):
    pass
