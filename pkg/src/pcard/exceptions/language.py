"""Language and enumeration exceptions."""

from .base import PCardError


class CensusInfeasibleError(PCardError):
    """Raised when brute-force enumeration would exceed the guard."""

    pass


class FuelExhaustedError(PCardError):
    """Raised when a membership call runs past its fuel limit."""

    pass


class UnknownGalleryError(PCardError):
    """Raised when a gallery construction name is not known."""

    pass


class GalleryParameterError(PCardError):
    """Raised when a gallery construction receives bad parameters."""

    pass
