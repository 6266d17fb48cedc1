"""Exception hierarchy for turanlab."""

from typing import Optional


class TuranLabError(ValueError):
    """Base class for every error raised by turanlab."""


class GraphError(TuranLabError):
    """Invalid graph construction (loops, bad endpoints, too many vertices)."""


class UnsupportedSizeError(TuranLabError):
    """A size cap of an exact algorithm was exceeded."""


class GraphFormatError(TuranLabError):
    """Malformed graph6 or edge-list text."""

    def __init__(self, message: str, offset: Optional[int] = None):
        self.offset = offset
        if offset is not None:
            message = f"{message} (at byte {offset})"
        super().__init__(message)


class InvalidPairError(TuranLabError):
    """A clique pair does not satisfy the split-copy preconditions."""


class InvalidTypeError(TuranLabError):
    """A type graph is not complete multipartite."""


class BalancingError(TuranLabError):
    """No balancing move exists between the requested parts."""


class ProvenanceError(TuranLabError):
    """A gadget is not registered as k-Turan-good."""


class GoodnessError(TuranLabError):
    """An attachment construction is invalid."""


class CertificateError(TuranLabError):
    """A certificate cannot be used for the requested evaluation."""


class SolverError(TuranLabError):
    """The exact LP solver reached an inconsistent state."""
