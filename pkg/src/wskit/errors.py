"""Exception hierarchy. CLI exit codes key off the two roots."""


class WskitError(Exception):
    """Base class for every error raised by the package."""


class GeometryError(WskitError, ValueError):
    pass


class TooFewVertices(GeometryError):
    pass


class DuplicateVertex(GeometryError):
    pass


class CollinearVertices(GeometryError):
    pass


class SelfIntersecting(GeometryError):
    pass


class PointOutside(GeometryError):
    pass


class NotMonotone(GeometryError):
    pass


class NoHit(GeometryError):
    """A ray from an inside point never left the polygon: an invariant broke."""


class NotVisible(GeometryError):
    pass


class DegenerateRegion(GeometryError):
    pass


class CloneCollision(GeometryError):
    pass


class KOutOfRange(WskitError, ValueError):
    pass


class NonPositiveEps(WskitError, ValueError):
    pass


class NotMonotoneVig(WskitError, ValueError):
    pass


class TooLarge(WskitError, ValueError):
    pass


class ParseError(WskitError, ValueError):
    pass


class BudgetExceeded(WskitError):
    """The exact solver hit its k budget; ``best`` holds the best solution found."""

    def __init__(self, message, best=None):
        super().__init__(message)
        self.best = best
