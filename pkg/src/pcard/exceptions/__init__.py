"""Exceptions raised by the p-cardinality toolkit."""

from .base import InvariantBreachError, PCardError, PreconditionError
from .choice import HorizonError, SliceEmptyError, WindowUnspecifiedError
from .dsl import DSLSyntaxError, DSLTypeError
from .language import (
    CensusInfeasibleError,
    FuelExhaustedError,
    GalleryParameterError,
    UnknownGalleryError,
)
from .strings import (
    AlphabetMismatchError,
    InvalidAlphabetError,
    InvalidStringError,
    UnderflowError,
)
from .witness import (
    AuditFailure,
    EndpointMismatchError,
    InfiniteWitnessRequiredError,
    OffsetMismatchError,
    RankNotFoundError,
    UnverifiedWitnessError,
)

__all__ = [
    "PCardError",
    "PreconditionError",
    "InvariantBreachError",
    "InvalidAlphabetError",
    "InvalidStringError",
    "AlphabetMismatchError",
    "UnderflowError",
    "CensusInfeasibleError",
    "FuelExhaustedError",
    "UnknownGalleryError",
    "GalleryParameterError",
    "EndpointMismatchError",
    "InfiniteWitnessRequiredError",
    "UnverifiedWitnessError",
    "AuditFailure",
    "OffsetMismatchError",
    "RankNotFoundError",
    "SliceEmptyError",
    "HorizonError",
    "WindowUnspecifiedError",
    "DSLSyntaxError",
    "DSLTypeError",
]
