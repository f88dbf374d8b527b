"""Exception hierarchy shared by every kummerbessel module."""


class KummerBesselError(Exception):
    """Base class for all library errors."""


class DomainError(KummerBesselError, ValueError):
    """An argument lies outside the supported domain (poles, bad orders, ...)."""


class InvalidInputError(DomainError):
    """A non-finite value was passed where a finite one is required."""


class RangeError(KummerBesselError, OverflowError):
    """The result would overflow double precision."""


class ConvergenceError(KummerBesselError, ArithmeticError):
    """A series failed to converge within its term budget."""


class ConsistencyError(KummerBesselError, ArithmeticError):
    """Two routes to the same quantity disagreed beyond their tolerance."""


class DegenerateDenominatorError(KummerBesselError, ZeroDivisionError):
    """A ratio whose denominator vanished (e.g. 1F1 + F = 0 in a deviation)."""
