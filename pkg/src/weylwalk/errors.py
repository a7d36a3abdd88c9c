"""Exception types raised by the library."""

__all__ = [
    "WeylWalkError",
    "NonUnitaryError",
    "UnknownPresetError",
    "GridTooSmallError",
    "UnsupportedOrderError",
    "NonPositiveTimeError",
    "DegenerateDirectionError",
    "DegenerateCoinError",
    "NotUnitError",
    "OutOfSupportError",
]


class WeylWalkError(ValueError):
    """Base class for all library-specific errors."""


class NonUnitaryError(WeylWalkError):
    """A matrix fails the unitarity invariant beyond tolerance."""


class UnknownPresetError(WeylWalkError):
    """A coin preset name is not recognized."""


class GridTooSmallError(WeylWalkError):
    """The wave-number grid cannot resolve the walk's spatial support."""


class UnsupportedOrderError(WeylWalkError):
    """A moment order outside the supported validation range was requested."""


class NonPositiveTimeError(WeylWalkError):
    """The diffusion kernel needs a strictly positive time."""


class DegenerateDirectionError(WeylWalkError):
    """The orbit direction field vanishes (diagonal coin at its perihelion)."""


class DegenerateCoinError(WeylWalkError):
    """The coin is diagonal or anti-diagonal, outside the limit law's domain."""


class NotUnitError(WeylWalkError):
    """A vector expected to have unit norm does not."""


class OutOfSupportError(WeylWalkError):
    """A point lies outside the limit density's support interval."""
