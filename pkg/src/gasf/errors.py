"""Exception hierarchy.

``InputError`` subclasses mean the caller handed us something malformed
(CLI exit status 1); ``DomainError`` subclasses are well-formed requests
whose mathematical preconditions fail (CLI exit status 2).
"""


class GasfError(Exception):
    """Base class for every error raised by the package."""


class InputError(GasfError):
    pass


class DomainError(GasfError):
    pass


# -- input errors ---------------------------------------------------------

class MalformedSpec(InputError):
    pass


class NonCartan(InputError):
    pass


class NotSimplyConnected(InputError):
    pass


class DimensionMismatch(InputError):
    pass


class InvalidTorusElement(InputError):
    pass


# -- domain errors --------------------------------------------------------

class NotIntegral(DomainError):
    pass


class DetClassMismatch(DomainError):
    pass


class NoIntegralDominator(DomainError):
    pass


class NotInvertible(DomainError):
    pass


class NotRegularSemisimple(DomainError):
    pass


class InconclusiveTruncation(DomainError):
    """A valuation could not be certified at the working truncation order."""


class WeylGroupTooLarge(DomainError):
    pass


class RankTooLarge(DomainError):
    pass


class AbelianizationMismatch(DomainError):
    pass


class EmptyFiber(DomainError):
    pass


class NotZeroTwisted(DomainError):
    pass


class CriteriaDisagree(DomainError):
    """Two criteria that must be equivalent gave different answers."""


class SuiteFailed(DomainError):
    pass


class NotDominant(DomainError):
    """A dominant (co)weight was required."""
