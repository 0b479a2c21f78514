"""Step-budgeted decidable languages."""

import os
from collections.abc import Callable
from .._compat import StrEnum
from typing import Any

from pydantic import BaseModel, ConfigDict, Field, field_validator

from ..exceptions import AlphabetMismatchError, FuelExhaustedError
from .alphabet import Alphabet
from .string import Str

DEFAULT_FUEL_LIMIT = 10**7

Evaluator = Callable[[Str], tuple[bool, int]]
CensusForm = Callable[[int], int]
RankForm = Callable[[Str], int]


def default_fuel_limit() -> int:
    if fuel := os.getenv("PCARD_FUEL_LIMIT"):
        return int(fuel)
    return DEFAULT_FUEL_LIMIT


class Membership(StrEnum):
    """Outcome of a budgeted membership call."""

    MEMBER = "member"
    NON_MEMBER = "non_member"
    OUT_OF_FUEL = "out_of_fuel"


class Language(BaseModel):
    """
    A named language with a step-counting membership evaluator.

    The evaluator returns (is_member, steps_consumed). Optional closed forms give
    the census c(n) = |L ∩ Σ^{<=n}| and the strong rank |{y ∈ L : y <= x}| without
    enumeration. Two languages are equal when their names and alphabets agree.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    name: str
    alphabet: Alphabet
    evaluator: Evaluator
    census_closed_form: CensusForm | None = None
    rank_closed_form: RankForm | None = None
    fuel_limit: int = Field(default_factory=default_fuel_limit)

    @field_validator("alphabet", mode="before")
    @classmethod
    def validate_alphabet(cls, v: Any) -> Alphabet:
        return v if isinstance(v, Alphabet) else Alphabet(v)

    @property
    def has_closed_forms(self) -> bool:
        return self.census_closed_form is not None and self.rank_closed_form is not None

    def decide(self, x: Str) -> Membership:
        if x.alphabet != self.alphabet:
            raise AlphabetMismatchError(
                f"{x} is not over the alphabet of {self.name} "
                f"(size {self.alphabet.size})"
            )
        member, steps = self.evaluator(x)
        if steps > self.fuel_limit:
            return Membership.OUT_OF_FUEL
        return Membership.MEMBER if member else Membership.NON_MEMBER

    def steps(self, x: Str) -> int:
        return self.evaluator(x)[1]

    def with_fuel(self, fuel_limit: int) -> "Language":
        return self.model_copy(update={"fuel_limit": fuel_limit})

    def __contains__(self, x: object) -> bool:
        if not isinstance(x, Str):
            return False
        verdict = self.decide(x)
        if verdict == Membership.OUT_OF_FUEL:
            raise FuelExhaustedError(
                f"Membership of {x} in {self.name} ran past {self.fuel_limit} steps"
            )
        return verdict == Membership.MEMBER

    def __str__(self) -> str:
        return self.name

    def __repr__(self) -> str:
        return f"Language('{self.name}')"

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Language):
            return self.name == other.name and self.alphabet == other.alphabet
        return False

    def __hash__(self) -> int:
        return hash((self.name, self.alphabet.size))


class CensusTable(BaseModel):
    """Census values c(0), c(1), ... for one language."""

    language: str
    entries: list[tuple[int, int]]

    def __getitem__(self, n: int) -> int:
        return dict(self.entries)[n]

    @property
    def is_monotone(self) -> bool:
        counts = [c for _, c in self.entries]
        return all(a <= b for a, b in zip(counts, counts[1:], strict=False))

    def to_csv(self) -> str:
        lines = ["n,count"]
        lines.extend(f"{n},{c}" for n, c in self.entries)
        return "\n".join(lines) + "\n"
