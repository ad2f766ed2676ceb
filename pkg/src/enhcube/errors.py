"""Exception hierarchy shared by every module."""


class EnhcubeError(Exception):
    """Base class for all package errors."""


class ParameterError(EnhcubeError, ValueError):
    """Invalid (n, k) or a vertex label outside [0, 2^n)."""


class NotAnEdgeError(EnhcubeError, ValueError):
    pass


class DecompositionUnavailableError(EnhcubeError):
    """Raised for Q_{k,k}: the folded hypercube is not split further."""


class InadmissibleLengthError(EnhcubeError, ValueError):
    """The requested cycle length is outside the guaranteed range for the edge.

    ``spec`` carries the :class:`~enhcube.embedder.LengthSpec` that was
    violated (may be None when no edge context exists) and ``reason`` a short
    human explanation.
    """

    def __init__(self, message, spec=None, reason=None):
        super().__init__(message)
        self.spec = spec
        self.reason = reason


class ConstructionError(EnhcubeError):
    """A construction precondition failed or a construction produced garbage.

    Seeing this from ``embed_cycle`` on an admissible request means a bug.
    """


class ResourceError(EnhcubeError):
    """A size guard on a brute-force routine was exceeded."""


class ConfigurationError(EnhcubeError, ValueError):
    pass
