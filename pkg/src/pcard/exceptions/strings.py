"""String and alphabet exceptions."""

from .base import PCardError


class InvalidAlphabetError(PCardError):
    """Raised when an alphabet size is out of range."""

    pass


class InvalidStringError(PCardError):
    """Raised when a string has symbols outside its alphabet or bad syntax."""

    pass


class AlphabetMismatchError(PCardError):
    """Raised when two strings (or a string and a map) disagree on alphabet."""

    pass


class UnderflowError(PCardError):
    """Raised when string arithmetic would go below the empty string."""

    pass
