class FixpointError(ValueError):
    """Base of every error raised by fixpointlab operations."""


class NonFiniteValue(FixpointError):
    pass


class ZeroLeadingFactor(FixpointError):
    pass


class DegreeZero(FixpointError):
    pass


class DegreeTooSmall(FixpointError):
    pass


class WrongDegree(FixpointError):
    pass


class NodesTooClose(FixpointError):
    pass


class MultipleFixedPoint(FixpointError):
    pass


class NotAFixedPoint(FixpointError):
    pass


class ConvergenceError(FixpointError):
    """An iterative method ran out of steps before meeting its target."""


class NoConvergence(ConvergenceError):
    pass


class DidNotConverge(ConvergenceError):
    pass
