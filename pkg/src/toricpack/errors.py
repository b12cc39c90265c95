"""Exception hierarchy.

Every error carries a stable ``code`` (the class name) which the CLI prints
and tests match on.
"""


class ToricPackError(Exception):
    """Base class for all library errors."""

    @property
    def code(self) -> str:
        return type(self).__name__


class InputError(ToricPackError, ValueError):
    """Malformed user input (JSON, vertex indices, parameters)."""


class DimensionMismatch(ToricPackError, ValueError):
    pass


class ZeroDirection(ToricPackError, ValueError):
    pass


class DegenerateSegment(ToricPackError, ValueError):
    pass


class DegenerateHull(ToricPackError, ValueError):
    def __init__(self, affine_dim: int, message: str | None = None):
        self.affine_dim = affine_dim
        super().__init__(message or f"point set spans an affine subspace of dimension {affine_dim}")


class Unbounded(ToricPackError, ValueError):
    pass


class NotSimple(ToricPackError, ValueError):
    pass


class NotDelzant(ToricPackError, ValueError):
    def __init__(self, message: str = "polytope is not Delzant", report=None):
        self.report = report
        super().__init__(message)


class BallTooLarge(ToricPackError, ValueError):
    def __init__(self, message: str, edge=None):
        self.edge = edge
        super().__init__(message)


class ChopTooDeep(ToricPackError, ValueError):
    def __init__(self, message: str, edge=None):
        self.edge = edge
        super().__init__(message)


class NotDelzantResult(ToricPackError, ValueError):
    def __init__(self, message: str, report=None):
        self.report = report
        super().__init__(message)


class DegenerateSimplex(ToricPackError, ValueError):
    pass


class InvalidFamily(ToricPackError, ValueError):
    def __init__(self, verdict):
        self.verdict = verdict
        super().__init__(f"family fails coherence/disjointness: {verdict.summary()}")


class RenderDimension(ToricPackError, ValueError):
    pass
