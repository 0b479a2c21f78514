"""Exceptions for collections, choice and uniformization."""

from .base import PCardError


class SliceEmptyError(PCardError):
    """Raised when a collection slice has no member inside its honesty window."""

    pass


class HorizonError(PCardError):
    """Raised when a search horizon cannot bracket the required window."""

    pass


class WindowUnspecifiedError(PCardError):
    """Raised when a relation has no declared output-length window."""

    pass
