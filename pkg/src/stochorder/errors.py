"""Exception hierarchy.

Every error raised by this package derives from :class:`StochOrderError`,
so callers can catch one type at an API boundary (the CLI maps them all to
exit code 2).
"""


class StochOrderError(Exception):
    """Base class for all errors raised by stochorder."""


class ValidationError(StochOrderError, ValueError):
    """Input violates a construction invariant (mass, support, grid shape)."""


class EmptyDistribution(ValidationError):
    """No atom or support point carries positive mass."""


class NotNormalizable(ValidationError):
    """Raw masses deviate from total 1 beyond tolerance and normalization
    was not requested."""


class SupportTooLarge(StochOrderError):
    """A product coupling would exceed the configured atom cap."""


class UndefinedAtSupport(StochOrderError):
    """A transform has no (finite) value at some support point."""


class EmptyComparisonRegion(StochOrderError):
    """No grid node qualifies for a pointwise order comparison."""


class InvalidEpsilon(ValidationError):
    """Band-and-triangle density parameter outside the open interval (0, 1)."""


class SampleTooSmall(StochOrderError):
    """Too few observed pairs for the requested estimate."""


class InputFormatError(StochOrderError):
    """A JSON or CSV input does not match the documented schema."""
