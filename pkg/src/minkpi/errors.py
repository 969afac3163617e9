"""Exception types shared by all minkpi modules."""


class MinkpiError(Exception):
    """Base class for every error raised by this package."""


class InvalidParameter(MinkpiError):
    """A numeric argument is outside its documented domain."""


class DegenerateInput(MinkpiError):
    """Input points do not span a two-dimensional region."""


class NotConvex(MinkpiError):
    """A vertex loop is not a strictly convex counterclockwise polygon."""


class EmptyIntersection(MinkpiError):
    """Two polygons have no common interior."""


class CenterNotInterior(MinkpiError):
    """A gauge center does not lie strictly inside its unit ball."""


class NoSharedAxis(MinkpiError):
    """No mirror axis through the center is shared by ball and polygon."""


class NoConvergence(MinkpiError):
    """Iterative refinement did not reach the requested tolerance."""


class DegenerateChord(MinkpiError):
    """The chord through the center has zero length."""


class InvalidOffset(MinkpiError):
    """A center offset is outside the interval where a closed form is valid."""


class Unreachable(MinkpiError):
    """The requested half-perimeter value is below the attainable minimum."""


class NotSymmetricBall(MinkpiError):
    """An operation defined only for norms received an asymmetric ball."""


class ZeroVector(MinkpiError):
    """A direction argument must be nonzero."""
