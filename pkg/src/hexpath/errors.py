"""Exception hierarchy shared by all hexpath modules."""


class HexpathError(Exception):
    """Base class for every error raised by this package."""


class PathError(HexpathError, ValueError):
    """A token string or step sequence is not a valid partial packing path."""

    def __init__(self, message: str, position: int | None = None):
        super().__init__(message)
        self.position = position


class UnknownToken(PathError):
    pass


class IllegalStart(PathError):
    pass


class IllegalTransition(PathError):
    def __init__(self, position: int, prev, step):
        super().__init__(f"step {step.name} cannot follow {prev.name} (position {position})", position)
        self.prev = prev
        self.step = step


class QuarterPlaneViolation(PathError):
    pass


class NotAxisPath(HexpathError, ValueError):
    """The operation needs a path ending on the x-axis."""


class NotInchworm(HexpathError, ValueError):
    pass


class LimitTooLarge(HexpathError, ValueError):
    """An enumeration or table request exceeds the configured safety bound."""


BoundExceeded = LimitTooLarge


class SeriesError(HexpathError, ArithmeticError):
    pass


class DivisionByZeroSeries(SeriesError, ZeroDivisionError):
    pass


class NonUnitConstantTerm(SeriesError):
    pass


class OddValuation(SeriesError):
    pass


class TruncationError(SeriesError):
    """A coefficient at or beyond the truncation order was requested."""


class InsufficientDepth(SeriesError):
    pass


class UnknownName(HexpathError, KeyError):
    pass


class OrderTooLarge(HexpathError, ValueError):
    pass


class IndexOutOfDomain(HexpathError, ValueError):
    pass


class InvalidPair(HexpathError, ValueError):
    """A (g, f) pair violates g(0) != 0, f(0) = 0, f'(0) != 0."""


class NotRiordan(HexpathError, ValueError):
    pass


class DecompositionFailure(HexpathError, RuntimeError):
    """A recursive bijection met a shape its cases do not cover."""


class InvalidImagePath(HexpathError, ValueError):
    pass


class NetworkError(HexpathError, OSError):
    pass
