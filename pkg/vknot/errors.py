"""
Exception hierarchy for the vknot package.
"""


class VKnotError(Exception):
    """Base class for every error raised by vknot."""


class GaussCodeError(VKnotError, ValueError):
    """A Gauss code could not be turned into a valid diagram."""


class BadToken(GaussCodeError):
    """A token is not of the form O<id><sign> or U<id><sign>."""


EmptyTokenError = BadToken


class RoleError(GaussCodeError):
    """A chord does not have exactly one Over and one Under endpoint."""


class SignMismatch(GaussCodeError):
    """The two endpoints of one chord carry different signs."""


class UnknownChord(VKnotError, KeyError):
    """The chord id is not part of the diagram."""


class NotCrossing(VKnotError, ValueError):
    """The two chords do not interleave."""


class UnknownVertex(VKnotError, KeyError):
    """The vertex id is not part of the graph."""


class GraphFormatError(VKnotError, ValueError):
    """A serialized graph is malformed."""


class InvalidSite(VKnotError, ValueError):
    """A move site does not apply to the given diagram or graph."""


class S2ConstraintUnsatisfiable(InvalidSite):
    """No sign/direction choice for the new shells meets the S2 constraints."""


class SizeLimit(VKnotError):
    """An input exceeds a configured size cap."""


class PolyParseError(VKnotError, ValueError):
    """Polynomial text does not follow the term grammar."""


class PolynomialBoundError(PolyParseError):
    """A coefficient or exponent is outside the supported range."""


class NotRealizable(VKnotError, ValueError):
    """The polynomial violates f(1) = 0 or f'(1) = 0."""


class BadSpec(VKnotError, ValueError):
    """A generator spec has an inconsistent family, exponent or orientation."""
