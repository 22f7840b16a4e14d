"""Exception hierarchy shared by all srglab modules."""


class SrglabError(Exception):
    """Base class for every error raised by srglab."""


class InvalidGraph(SrglabError, ValueError):
    """Adjacency data is not a simple undirected graph."""


class EmptyEdgeSet(SrglabError, ValueError):
    pass


class OutOfRange(SrglabError, IndexError):
    pass


class SameVertex(SrglabError, ValueError):
    pass


class DomainTooSmall(SrglabError, ValueError):
    pass


class NotPrime(SrglabError, ValueError):
    pass


class TooLarge(SrglabError, ValueError):
    """Input exceeds a configured size cap."""


class InvalidParams(SrglabError, ValueError):
    """Parameter vector violates the basic SRG range constraints."""


class InfeasibleParams(SrglabError, ValueError):
    """Parameters are in range but a closed form is undefined or non-integral."""


class NegativeParameter(InfeasibleParams):
    pass


class DegenerateGraph(SrglabError, ValueError):
    """Graph is complete or empty where a noncomplete, nonempty graph is required."""


class ParamRelationViolated(SrglabError, ValueError):
    pass


class OrderMismatch(SrglabError, ValueError):
    pass


class NotConverged(SrglabError, RuntimeError):
    pass


class ParseError(SrglabError, ValueError):
    pass
