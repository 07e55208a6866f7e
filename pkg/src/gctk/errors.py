"""Exception types shared across the toolkit.

Every domain error derives from ToolkitError so callers (and the CLI) can
distinguish bad input from genuine bugs with a single except clause.
"""

from __future__ import annotations


class ToolkitError(Exception):
    """Base class for all toolkit errors."""


class InvalidGraph(ToolkitError):
    """Graph construction rejected (self-loop, duplicate edge, bad labels)."""


class UnknownVertex(ToolkitError):
    pass


class UnknownEdge(ToolkitError):
    pass


class CyclicGraph(ToolkitError):
    """Raised where acyclicity is required; carries one witness cycle."""

    def __init__(self, message: str, cycle: tuple = ()):
        super().__init__(message)
        self.cycle = tuple(cycle)


class ParseError(ToolkitError):
    """Input file rejected; carries the 1-based offending line number."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class SizeLimit(ToolkitError):
    """An enumeration exceeded the configured face-count cap."""


class NotAPermutation(ToolkitError):
    pass


class WedgeWithEmpty(ToolkitError):
    pass


class EmptyComplex(ToolkitError):
    pass


class EmptyRootSet(ToolkitError):
    pass


class NoSuchForest(ToolkitError):
    pass


class RootMismatch(ToolkitError):
    pass


class NoEdges(ToolkitError):
    pass


class EquivalenceViolation(ToolkitError):
    """Statements that must agree did not; always indicates a bug."""


class FactViolation(ToolkitError):
    """A structural identity that must hold did not; always indicates a bug."""


class NotAForest(ToolkitError):
    pass


class NeighborhoodNotClique(ToolkitError):
    pass


class RecursionStuck(ToolkitError):
    """No vertex with a clique neighborhood exists in a residual graph."""


class ConditionViolated(ToolkitError):
    pass


class CliqueRequired(ToolkitError):
    pass


class DegenerateCycle(ToolkitError):
    pass


class EmptyGraph(ToolkitError):
    pass


class ZeroDegree(ToolkitError):
    """Edgeless graph: the independence complex is a full simplex."""


class NotMaximal(ToolkitError):
    pass


class NotAcyclic(ToolkitError):
    pass


class WrongMetric(ToolkitError):
    pass


class DuplicatePoint(ToolkitError):
    pass
