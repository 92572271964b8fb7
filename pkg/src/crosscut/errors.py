"""Exception hierarchy shared by every module of the package."""


class CrosscutError(Exception):
    """Base class for all package errors."""


class InvalidInput(CrosscutError, ValueError):
    pass


class CycleDetected(InvalidInput):
    pass


class NonHasseCover(InvalidInput):
    pass


class UnknownElement(InvalidInput, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class NotComparable(InvalidInput):
    pass


class NotBounded(InvalidInput):
    pass


class NotALattice(InvalidInput):
    """Raised with the offending pair and its minimal upper (or lower) bounds."""

    def __init__(self, message, pair=None, bounds=None):
        super().__init__(message)
        self.pair = pair
        self.bounds = bounds


class TrivialInterval(InvalidInput):
    pass


class NotAFace(InvalidInput):
    pass


class GroundSetOverlap(InvalidInput):
    pass


class TooLarge(CrosscutError):
    pass


class GuardExceeded(CrosscutError):
    pass


class NotAPartition(InvalidInput):
    pass


class NotOrderConvex(InvalidInput):
    pass


class IncompleteLabelling(InvalidInput):
    pass


class SearchBudgetExceeded(CrosscutError):
    pass


class DimensionMismatch(InvalidInput):
    pass


class NotSubarrangement(InvalidInput):
    pass


class UnknownName(InvalidInput):
    pass


class ParamOutOfRange(InvalidInput):
    pass
