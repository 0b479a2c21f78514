"""Equipollence claims and their verification reports."""

from .._compat import StrEnum
from typing import Any

from pydantic import BaseModel, ConfigDict, model_validator

from ..exceptions import AlphabetMismatchError
from .language import Language
from .partial_map import PartialMap
from .polynomial import Polynomial
from .string import Str


class Side(StrEnum):
    A = "A"
    B = "B"


class ViolationKind(StrEnum):
    """Ways a claimed equipollence can fail on a tested input."""

    UNDEFINED = "undefined"
    ESCAPES_CODOMAIN = "escapes_codomain"
    ROUNDTRIP_FAILURE = "roundtrip_failure"
    CLOCK_BREACH = "clock_breach"


class Equipollence(BaseModel):
    """
    A claimed p-equipollence between languages A and B.

    `forward` maps A into B and `backward` maps B into A. The object is only a
    claim until `verify_equipollence` has found no violations.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    name: str
    forward: PartialMap
    backward: PartialMap
    a: Language
    b: Language

    @model_validator(mode="after")
    def check_alphabets(self) -> "Equipollence":
        a, b = self.a.alphabet, self.b.alphabet
        if self.forward.source != a or self.backward.target != a:
            raise AlphabetMismatchError(
                f"{self.name}: maps disagree with {self.a.name}"
            )
        if self.forward.target != b or self.backward.source != b:
            raise AlphabetMismatchError(
                f"{self.name}: maps disagree with {self.b.name}"
            )
        return self

    def inverse(self) -> "Equipollence":
        return Equipollence(
            name=f"inverse({self.name})",
            forward=self.backward,
            backward=self.forward,
            a=self.b,
            b=self.a,
        )

    def __str__(self) -> str:
        return self.name

    def __repr__(self) -> str:
        return f"Equipollence('{self.name}': {self.a.name} ≈ {self.b.name})"


class Violation(BaseModel):
    model_config = ConfigDict(frozen=True)

    input: Str
    kind: ViolationKind
    side: Side
    detail: str = ""

    def to_dict(self) -> dict[str, Any]:
        return {
            "input": str(self.input),
            "kind": self.kind.value,
            "side": self.side.value,
            "detail": self.detail,
        }


class VerificationReport(BaseModel):
    """Result of checking an equipollence on every member up to a length."""

    witness: str
    checked_up_to: int
    violations: list[Violation] = []
    max_steps: dict[int, int] = {}

    @property
    def clean(self) -> bool:
        return not self.violations

    def of_kind(self, kind: ViolationKind) -> list[Violation]:
        return [v for v in self.violations if v.kind == kind]

    def summary(self) -> str:
        if self.clean:
            return f"{self.witness}: verified up to length {self.checked_up_to}"
        count = len(self.violations)
        return f"{self.witness}: {count} violation(s) up to length {self.checked_up_to}"


class MapAudit(BaseModel):
    """Injectivity, honesty and length-increase of a map over its tested domain."""

    map: str
    checked_up_to: int
    injective: bool
    collision: tuple[Str, Str] | None = None
    honest_with: int | None = None
    length_increasing: bool
    shrinking_input: Str | None = None

    @property
    def honesty_polynomial(self) -> Polynomial | None:
        """n^k + k for the reported honesty constant k."""
        k = self.honest_with
        if k is None:
            return None
        if k == 0:
            return Polynomial([1])
        coefficients = [0] * (k + 1)
        coefficients[0] += k
        coefficients[k] += 1
        return Polynomial(coefficients)


class EmbeddingPair(BaseModel):
    """Two one-sided embeddings: A onto a sublanguage of B, and B onto one of A."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    a: Language
    b: Language
    a_into_b: Equipollence
    b_into_a: Equipollence


class Enumeration(BaseModel):
    """A language listed by iterating `step` from `x0`."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    x0: Str
    step: PartialMap
    step_inverse: PartialMap

    def take(self, count: int) -> list[Str]:
        items: list[Str] = []
        x: Str | None = self.x0
        while x is not None and len(items) < count:
            items.append(x)
            x = self.step(x)
        return items
