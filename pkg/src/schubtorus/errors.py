"""Exception hierarchy shared by every module."""


class SchubTorusError(Exception):
    """Base class for all errors raised by this package."""


class Malformed(SchubTorusError, ValueError):
    pass


class NotABijection(SchubTorusError, ValueError):
    pass


class IndexOutOfRange(SchubTorusError, IndexError):
    pass


class SizeMismatch(SchubTorusError, ValueError):
    pass


class NotBruhatComparable(SchubTorusError, ValueError):
    pass


class CyclicGraph(SchubTorusError, ValueError):
    pass


class DimensionMismatch(SchubTorusError, ValueError):
    pass


class ProportionalGenerators(SchubTorusError, ValueError):
    pass


class UnknownTheorem(SchubTorusError, KeyError):
    def __str__(self) -> str:
        return str(self.args[0]) if self.args else ""


class SizeTooLarge(SchubTorusError, ValueError):
    pass


class InconsistencyError(SchubTorusError, AssertionError):
    """Two independent computations of the same quantity disagree."""
