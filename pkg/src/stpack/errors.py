"""Exception types raised by the library."""


class PackingError(ValueError):
    """Base class for all domain errors raised by stpack."""


class PolygonError(PackingError):
    """Input points do not form a valid strictly convex polygon."""


class DelzantError(PackingError):
    """A polygon fails the Delzant condition where it is required."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class RepresentativeError(PackingError):
    """A semitoric polygon representative is malformed or invalid."""


class FamilyDomainError(PackingError):
    """Parameters lie outside the domain of a named polygon family."""


class InfeasibleError(PackingError):
    """A size vector violates a constraint of the packing polytope."""

    def __init__(self, message, constraint=None):
        super().__init__(message)
        self.constraint = constraint


class UnboundedError(PackingError):
    """A halfspace system describes an unbounded region."""


class ParseError(PackingError):
    """An input document could not be parsed."""
