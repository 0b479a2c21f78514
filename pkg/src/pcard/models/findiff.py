"""Finite differences of a language and the shift functions they induce."""

import bisect

from pydantic import BaseModel, ConfigDict, field_validator, model_validator

from ..exceptions import AlphabetMismatchError, InvariantBreachError
from .language import CensusForm, Language, RankForm
from .partial_map import PartialMap
from .string import Str


def _quoted(strs: list[Str]) -> str:
    return "[" + ", ".join(f'"{s}"' for s in strs) + "]"


class FiniteDiff(BaseModel):
    """
    B = (A ∪ P) \\ N for a base A, finitely many added strings P outside A and
    finitely many removed strings N inside A.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    base: Language
    added: list[Str] = []
    removed: list[Str] = []

    @field_validator("added", "removed", mode="before")
    @classmethod
    def normalize(cls, v: list[Str | str]) -> list[Str]:
        return sorted({s if isinstance(s, Str) else Str.parse(s) for s in v})

    @model_validator(mode="after")
    def check_difference(self) -> "FiniteDiff":
        for s in self.added + self.removed:
            if s.alphabet != self.base.alphabet:
                raise AlphabetMismatchError(
                    f"{s} is not over the alphabet of {self.base}"
                )
        for s in self.added:
            if s in self.base:
                raise InvariantBreachError(
                    f"Added string {s} is already in {self.base}"
                )
        for s in self.removed:
            if s not in self.base:
                raise InvariantBreachError(f"Removed string {s} is not in {self.base}")
        return self

    @property
    def offset(self) -> int:
        """|B \\ A| - |A \\ B|."""
        return len(self.added) - len(self.removed)

    @property
    def touched(self) -> list[Str]:
        return sorted(self.added + self.removed)

    @property
    def max_length(self) -> int:
        return max((len(s) for s in self.touched), default=-1)

    def derived(self) -> Language:
        base = self.base
        added, removed = frozenset(self.added), frozenset(self.removed)

        def evaluate(x: Str) -> tuple[bool, int]:
            if x in added:
                return True, len(x) + 1
            if x in removed:
                return False, len(x) + 1
            return base.evaluator(x)

        census_form: CensusForm | None = None
        rank_form: RankForm | None = None
        c, r = base.census_closed_form, base.rank_closed_form
        if c is not None and r is not None:

            def diff_census(n: int) -> int:
                plus = sum(1 for s in added if len(s) <= n)
                minus = sum(1 for s in removed if len(s) <= n)
                return c(n) + plus - minus

            def diff_rank(x: Str) -> int:
                plus = sum(1 for s in added if s <= x)
                minus = sum(1 for s in removed if s <= x)
                return r(x) + plus - minus

            census_form, rank_form = diff_census, diff_rank

        return Language(
            name=f"diff({base.name}, {_quoted(self.added)}, {_quoted(self.removed)})",
            alphabet=base.alphabet,
            evaluator=evaluate,
            census_closed_form=census_form,
            rank_closed_form=rank_form,
            fuel_limit=base.fuel_limit,
        )


class ShiftFn(BaseModel):
    """
    A step function on Σ*. `values[i]` holds on the strings with exactly i
    breakpoints at or below them.
    """

    model_config = ConfigDict(frozen=True)

    breakpoints: list[Str]
    values: list[int]

    @model_validator(mode="after")
    def check_shape(self) -> "ShiftFn":
        if len(self.values) != len(self.breakpoints) + 1:
            raise InvariantBreachError(
                f"{len(self.breakpoints)} breakpoints need "
                f"{len(self.breakpoints) + 1} values"
            )
        return self

    def __call__(self, x: Str) -> int:
        keys = [z.sort_key for z in self.breakpoints]
        return self.values[bisect.bisect_right(keys, x.sort_key)]


class PredecessorReport(BaseModel):
    """A \\ {x} embeds into A, and the finite-difference criterion refuses a witness."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    base: str
    removed: Str
    injection: PartialMap
    witness_rejected: bool
    reason: str
