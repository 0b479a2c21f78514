"""Expression language exceptions."""

from .base import PCardError


class DSLSyntaxError(PCardError):
    """Raised on malformed expression text. Carries the character position."""

    def __init__(self, message: str, position: int) -> None:
        super().__init__(f"{message} at position {position}")
        self.position = position


class DSLTypeError(PCardError):
    """Raised when an argument has the wrong kind."""

    def __init__(self, message: str, expected: str, actual: str) -> None:
        super().__init__(f"{message}: expected {expected}, got {actual}")
        self.expected = expected
        self.actual = actual
