"""Exception types shared across the package."""

from __future__ import annotations


class GraphError(ValueError):
    """Invalid graph, vertex, edge or vertex set for the requested operation."""


class EdgelessGraphError(GraphError):
    """The operation needs a graph with at least one edge."""


class InstanceTooLargeError(ValueError):
    """An exact/exhaustive routine was asked to run above its size threshold."""


class PreconditionError(ValueError):
    """A documented precondition of an operation does not hold."""


class ParseError(ValueError):
    """Malformed graph6 or edge-list input."""


class VerificationError(AssertionError):
    """A construction failed its own runtime certificate check."""
