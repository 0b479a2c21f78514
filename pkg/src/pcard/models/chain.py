"""Injections with inverses, and Cantor–Bernstein chain verdicts."""

from .._compat import StrEnum

from pydantic import BaseModel, ConfigDict

from .equipollence import Side
from .partial_map import PartialMap
from .string import Str


class Injection(BaseModel):
    """An injective map together with a caller-supplied inverse evaluator."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    forward: PartialMap
    inverse: PartialMap

    @property
    def name(self) -> str:
        return f"injection({self.forward.name}, {self.inverse.name})"

    def __str__(self) -> str:
        return self.name


class Origin(StrEnum):
    SOURCE_IN_A = "source_in_a"
    SOURCE_IN_B = "source_in_b"


class ChainVerdict(BaseModel):
    """Where the chain through a string starts.

    The walk lists the strings visited going backwards, starting at the query and
    ending at the chain's source.
    """

    origin: Origin
    walk: list[Str]
    steps_used: int

    @property
    def source(self) -> Str:
        return self.walk[-1]


class Chain(BaseModel):
    """One connected component of the back-and-forth graph, cut to a length."""

    origin: Origin
    source: Str
    members: list[tuple[Side, Str]]
