"""Exception hierarchy shared by every module of the package."""


class HypergraphError(Exception):
    """Base class for all errors raised by hgacyclic."""


class UnknownVertex(HypergraphError, KeyError):
    def __init__(self, vertex):
        super().__init__(vertex)
        self.vertex = vertex

    def __str__(self):
        return f"vertex {self.vertex!r} is not in the hypergraph"


class EdgeNotInHypergraph(HypergraphError, KeyError):
    def __init__(self, edge):
        super().__init__(edge)
        self.edge = edge

    def __str__(self):
        return f"edge {sorted(self.edge)!r} is not an edge of the hypergraph"


class InvalidSubset(HypergraphError, ValueError):
    pass


class NotNeighbours(HypergraphError, ValueError):
    pass


class StepDoesNotApply(HypergraphError, ValueError):
    pass


class MalformedTree(HypergraphError, ValueError):
    pass


class NotAlphaAcyclic(HypergraphError, ValueError):
    pass


class InternalInconsistency(HypergraphError, AssertionError):
    """A result violated an invariant that the theory guarantees. Always a bug."""


class ParseError(HypergraphError, ValueError):
    def __init__(self, message, line=None):
        super().__init__(message)
        self.line = line

    def __str__(self):
        msg = super().__str__()
        return f"line {self.line}: {msg}" if self.line is not None else msg


class MalformedToken(ParseError):
    pass


class EmptyEdgeLine(ParseError):
    pass
