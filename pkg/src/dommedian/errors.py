"""Exception hierarchy shared by every module of the package."""


class GraphError(ValueError):
    """Base class for all errors raised by dommedian."""


class OrderOutOfRange(GraphError):
    pass


class InvalidEdge(GraphError):
    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class VertexOutOfRange(GraphError):
    pass


class CapacityExceeded(GraphError):
    pass


class BudgetExceeded(GraphError):
    """An exponential enumeration would exceed its configured budget."""


class IsolatedVertexPresent(GraphError):
    pass


class VertexNotInSet(GraphError):
    pass


class PreconditionViolated(GraphError):
    pass


class NotFullDominatingGraph(GraphError):
    pass


class EmptyGraph(GraphError):
    pass


class DisconnectedTriple(GraphError):
    pass


class NotPartialCube(GraphError):
    pass


class TooManyClasses(GraphError):
    pass


class OrderTooLarge(GraphError):
    pass


class ParseError(GraphError):
    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class Graph6Error(ParseError):
    pass


class BadHeader(Graph6Error):
    pass


class BadLength(Graph6Error):
    pass


class NonPrintableByte(Graph6Error):
    pass


class NonzeroPadding(Graph6Error):
    pass
