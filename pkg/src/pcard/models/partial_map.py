"""Clocked partial maps between string spaces."""

from collections.abc import Callable
from typing import Any

from pydantic import BaseModel, ConfigDict, field_validator

from ..exceptions import AlphabetMismatchError
from .alphabet import Alphabet
from .language import Language
from .polynomial import TimeBound
from .string import Str

MapEvaluator = Callable[[Str], tuple[Str | None, int]]


def overrun(bound: TimeBound, x: Str, steps: int) -> int:
    """A step count of at least `steps` that runs past `bound` on x."""
    return max(steps, bound(len(x)) + 1)



class MapResult(BaseModel):
    """Outcome of one clocked run."""

    model_config = ConfigDict(frozen=True)

    value: Str | None
    steps: int
    clocked_out: bool = False

    @property
    def defined(self) -> bool:
        return self.value is not None


class PartialMap(BaseModel):
    """
    A partial function Σ* → Γ* with a declared clock bound.

    Runs that report more steps than `bound(|x|)` yield no output, the way a
    clocked machine that has not answered in time rejects.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    name: str
    source: Alphabet
    target: Alphabet
    evaluator: MapEvaluator
    bound: TimeBound
    domain: Language | None = None

    @field_validator("source", "target", mode="before")
    @classmethod
    def validate_alphabet(cls, v: Any) -> Alphabet:
        return v if isinstance(v, Alphabet) else Alphabet(v)

    @classmethod
    def from_function(
        cls,
        name: str,
        source: Alphabet | int,
        target: Alphabet | int,
        fn: Callable[[Str], Str | None],
        bound: TimeBound,
        domain: Language | None = None,
    ) -> "PartialMap":
        """Wrap a plain function, charging |x| + |f(x)| + 1 steps per call."""

        def evaluate(x: Str) -> tuple[Str | None, int]:
            y = fn(x)
            return y, len(x) + (len(y) if y is not None else 0) + 1

        return cls(
            name=name,
            source=source,
            target=target,
            evaluator=evaluate,
            bound=bound,
            domain=domain,
        )

    def run(self, x: Str) -> MapResult:
        if x.alphabet != self.source:
            raise AlphabetMismatchError(
                f"{self.name} reads alphabet {self.source.size}, got {x}"
            )
        value, steps = self.evaluator(x)
        if steps > self.bound(len(x)):
            return MapResult(value=None, steps=steps, clocked_out=True)
        return MapResult(value=value, steps=steps)

    def __call__(self, x: Str) -> Str | None:
        return self.run(x).value

    def renamed(self, name: str) -> "PartialMap":
        return self.model_copy(update={"name": name})

    def __str__(self) -> str:
        return self.name

    def __repr__(self) -> str:
        return f"PartialMap('{self.name}')"

    def __eq__(self, other: object) -> bool:
        if isinstance(other, PartialMap):
            return self.name == other.name and self.source == other.source
        return False

    def __hash__(self) -> int:
        return hash((self.name, self.source.size, self.target.size))
