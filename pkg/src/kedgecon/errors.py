"""Exception hierarchy shared by every module."""


class GraphError(ValueError):
    """Base class for all domain errors raised by kedgecon."""


class SelfLoopRejected(GraphError):
    pass


class UnknownVertex(GraphError):
    pass


class UnknownEdge(GraphError):
    pass


class SameVertex(GraphError):
    pass


class TooFewVertices(GraphError):
    pass


class BadK(GraphError):
    pass


class OverlappingSets(GraphError):
    pass


class EmptyVertexSet(GraphError):
    pass


class PartitionNotCover(GraphError):
    pass


class NotKConnected(GraphError):
    pass


class NotEdgeMinimal(GraphError):
    pass


class NotExactlyK(GraphError):
    pass


class TooLarge(GraphError):
    pass


class InvalidCut(GraphError):
    pass


class TrivialCut(GraphError):
    pass


class NotMinCut(GraphError):
    pass


class ParseError(GraphError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class BadUsage(GraphError):
    pass


class ClaimViolation(AssertionError):
    """A checked claim failed on a concrete graph.

    Raised instead of silently continuing so the harness can record the
    graph as a counterexample.
    """

    def __init__(self, claim, detail, graph=None):
        self.claim = claim
        self.detail = detail
        self.graph = graph
        super().__init__(f"{claim}: {detail}")
