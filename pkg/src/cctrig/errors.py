"""Exception taxonomy shared across the kernel.

Everything raised on purpose derives from GeometryError, so callers can
catch one type at the boundary and still tell apart bad input, inputs
for which no figure exists, and collapsed configurations.
"""


class GeometryError(Exception):
    """Base class for every error this package raises deliberately."""


class DomainError(GeometryError):
    """Input outside the mathematical domain of an operation."""


class InfeasibleError(GeometryError):
    """No triangle or configuration exists for the given data."""


class DegenerateError(GeometryError):
    """The data collapses the figure to a lower-dimensional one."""


class SimilarityError(InfeasibleError):
    """Euclidean angles determine a triangle only up to similarity."""


class SamplingError(GeometryError):
    """Rejection sampling exhausted its attempt budget."""
