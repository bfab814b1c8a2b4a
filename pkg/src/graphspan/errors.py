"""Exception types shared by all graphspan modules."""


class GraphSpanError(Exception):
    """Base class for every error raised by this package."""


class MalformedInput(GraphSpanError):
    """Input text does not follow the edge-list or graph6 grammar."""


class IndexOutOfRange(GraphSpanError):
    """A vertex index lies outside 0..n-1."""


class SelfLoop(GraphSpanError):
    """An edge joins a vertex to itself."""


class DuplicateEdge(GraphSpanError):
    """The same unordered vertex pair appears twice."""


class DisconnectedInput(GraphSpanError):
    """The graph is not connected; spans are defined on connected graphs only."""


class InvalidParams(GraphSpanError):
    """Family parameters outside the family's admissible range."""


class EdgeNotPresent(GraphSpanError):
    """The named edge does not belong to the graph."""


class EmptyEdgeSet(GraphSpanError):
    """The operation needs at least one edge."""


class InvalidVertex(GraphSpanError):
    """A walk entry is not a vertex of the graph."""


class LengthMismatch(GraphSpanError):
    """The two walks do not have the same number of entries."""


class NotATrack(GraphSpanError):
    """The walk contains a stay-step where a strict track is required."""


class NotEulerian(GraphSpanError):
    """The graph has neither an Eulerian circuit nor an Eulerian trail."""


class ThresholdOutOfRange(GraphSpanError):
    """The distance threshold is negative or exceeds the graph radius."""


class TooLarge(GraphSpanError):
    """The exhaustive enumeration bound was exceeded."""


class NoClosedForm(GraphSpanError):
    """No tabulated closed form exists for the requested family/variant."""


class VerificationFailure(GraphSpanError):
    """A cross-check against tabulated reference values failed."""
