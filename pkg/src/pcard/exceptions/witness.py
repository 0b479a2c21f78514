"""Witness construction exceptions."""

from typing import TYPE_CHECKING

from .base import PCardError

if TYPE_CHECKING:
    from ..models.string import Str


class EndpointMismatchError(PCardError):
    """Raised when two witnesses are composed over different languages."""

    pass


class UnverifiedWitnessError(PCardError):
    """Raised when a witness required to be clean has violations."""

    pass


class AuditFailure(PCardError):
    """Raised when a map fails an audit. Carries the offending input."""

    def __init__(self, message: str, offending: "Str | None" = None) -> None:
        super().__init__(message)
        self.offending = offending


class OffsetMismatchError(PCardError):
    """Raised when finite-difference offsets rule out a construction."""

    pass


class RankNotFoundError(PCardError):
    """Raised when no member of the requested rank is found.

    Attributes:
        low: Σ*-index of the member ranked just below the requested rank
            (0 when there is none).
        high: First Σ*-index ranked at or above the requested rank, or one past
            the search range.
    """

    def __init__(self, message: str, low: int, high: int) -> None:
        super().__init__(message)
        self.low = low
        self.high = high


class InfiniteWitnessRequiredError(PCardError):
    """Raised when a construction needs an infinite language and got a finite one."""

    pass
