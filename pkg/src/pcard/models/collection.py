"""Indexed collections of languages and multivalued maps, given as pair languages."""

from pydantic import BaseModel, ConfigDict, field_validator

from ..exceptions import PreconditionError
from .language import Language
from .polynomial import Polynomial
from .string import Str


class Collection(BaseModel):
    """
    The family L_x = {y : pair(x, y) ∈ carrier}.

    Honest non-emptiness looks for a member of L_x with length between
    p_low(|x|) and q_high(|x|).
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    carrier: Language
    p_low: Polynomial
    q_high: Polynomial

    @field_validator("p_low", "q_high", mode="before")
    @classmethod
    def coerce_polynomial(cls, v: Polynomial | list[int]) -> Polynomial:
        return v if isinstance(v, Polynomial) else Polynomial(v)

    @field_validator("p_low", "q_high")
    @classmethod
    def check_positive_degree(cls, v: Polynomial) -> Polynomial:
        if v.degree < 1:
            raise PreconditionError(f"Honesty bounds need positive degree, got {v}")
        return v

    @property
    def name(self) -> str:
        return (
            f"collection({self.carrier.name}, p={list(self.p_low.coefficients)}, "
            f"q={list(self.q_high.coefficients)})"
        )

    def window(self, x: Str) -> tuple[int, int]:
        return self.p_low(len(x)), self.q_high(len(x))

    def __str__(self) -> str:
        return self.name


class MultiMap(BaseModel):
    """A multivalued map given by its graph; set-f(x) is the slice at x."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    graph: Language
    low: Polynomial | None = None
    high: Polynomial | None = None

    @field_validator("low", "high", mode="before")
    @classmethod
    def coerce_polynomial(cls, v: Polynomial | list[int] | None) -> Polynomial | None:
        if v is None or isinstance(v, Polynomial):
            return v
        return Polynomial(v)

    @property
    def name(self) -> str:
        parts = [self.graph.name]
        if self.low is not None:
            parts.append(f"low={list(self.low.coefficients)}")
        if self.high is not None:
            parts.append(f"high={list(self.high.coefficients)}")
        return f"multimap({', '.join(parts)})"

    def __str__(self) -> str:
        return self.name


class SliceVerdict(BaseModel):
    x: Str
    witness: Str | None = None

    @property
    def nonempty(self) -> bool:
        return self.witness is not None


class HonestyReport(BaseModel):
    collection: str
    checked_up_to: int
    rows: list[SliceVerdict]

    @property
    def passes(self) -> bool:
        return all(row.nonempty for row in self.rows)

    @property
    def failures(self) -> list[Str]:
        return [row.x for row in self.rows if not row.nonempty]


class DisjointnessReport(BaseModel):
    collection: str
    checked_up_to: int
    disjoint: bool
    offending: Str | None = None
    indices: tuple[Str, Str] | None = None


class RefinementReport(BaseModel):
    """Domain equality and value containment of f against R."""

    relation: str
    refinement: str
    checked_up_to: int
    domain_mismatches: list[Str] = []
    escaped_values: list[Str] = []

    @property
    def holds(self) -> bool:
        return not self.domain_mismatches and not self.escaped_values
