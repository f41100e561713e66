"""Exception types shared across the package."""


class ParameterError(ValueError):
    """A parameter is outside the domain an operation is defined on."""


class NotAdjacentError(ValueError):
    """An operation on an edge was asked about a non-adjacent vertex pair."""


class UnlabeledGraphError(TypeError):
    """A color-dependent operation was applied to a graph without edge labels."""


class DegenerateCaseError(ValueError):
    """The requested instance collapses (fixed point, equal sides, ...)."""
