"""Root of the toolkit's exception hierarchy."""


class PCardError(Exception):
    """Base class for every error raised by the toolkit."""

    pass


class PreconditionError(PCardError):
    """Raised when an operation's declared precondition does not hold."""

    pass


class InvariantBreachError(PCardError):
    """Raised when a structural invariant is observed to be false."""

    pass
