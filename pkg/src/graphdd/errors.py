"""Error taxonomy shared by the whole package."""


class GraphDDError(Exception):
    """Base class for all package errors."""


class InvalidArgumentError(GraphDDError, ValueError):
    """Malformed string, graph, or parameter."""


class EmptyLanguageError(GraphDDError):
    """Sampling requested from a diagram that accepts nothing."""


class ResourceLimitError(GraphDDError):
    """Request exceeds the built-in brute-force size caps."""


class UndefinedBicliqueError(GraphDDError):
    """Biclique number asked of an edgeless graph."""


class InconsistencyError(GraphDDError):
    """An internal invariant failed; indicates malformed input deeper down."""
