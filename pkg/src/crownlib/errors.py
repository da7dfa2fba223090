"""Exception hierarchy shared by every module."""

from __future__ import annotations


class CrownlibError(Exception):
    """Base class for all library errors."""


class LinearityViolation(CrownlibError):
    def __init__(self, triple, pair, existing):
        self.triple = triple
        self.pair = pair
        self.existing = existing
        super().__init__(
            f"edge {triple} covers pair {pair} already covered by {existing}"
        )


class DuplicateEdge(CrownlibError):
    pass


class EdgeNotPresent(CrownlibError):
    pass


class InvalidTriple(CrownlibError, ValueError):
    pass


class VertexOutOfRange(CrownlibError, ValueError):
    pass


class EmptyVertexSet(CrownlibError):
    pass


class ParseError(CrownlibError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(prefix + message)


class TargetNotDominated(CrownlibError):
    pass


class PreconditionViolated(CrownlibError):
    def __init__(self, clause: str):
        self.clause = clause
        super().__init__(f"precondition failed: {clause}")


class UnknownName(CrownlibError, KeyError):
    def __str__(self) -> str:
        return str(self.args[0]) if self.args else "unknown name"


class TooFewVertices(CrownlibError, ValueError):
    pass


class InfeasibleRequest(CrownlibError):
    pass


class Reducible(CrownlibError):
    """Raised when a vertex of degree at most one makes the graph reducible."""

    def __init__(self, vertex: int, degree: int):
        self.vertex = vertex
        self.degree = degree
        super().__init__(f"vertex {vertex} has degree {degree} <= 1")


class BudgetExceeded(CrownlibError):
    """Search stopped early; ``result`` holds the best graph found so far."""

    def __init__(self, result):
        self.result = result
        super().__init__(
            f"budget exceeded after {result.nodes_explored} nodes; best so far {result.best}"
        )
