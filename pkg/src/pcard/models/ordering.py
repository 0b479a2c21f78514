"""Orderings induced on a language by a witness."""

import itertools
from collections.abc import Callable
from .._compat import StrEnum

from pydantic import BaseModel, ConfigDict

from .language import Language
from .polynomial import Polynomial
from .string import Str


class Comparison(StrEnum):
    LT = "LT"
    EQ = "EQ"
    GT = "GT"


class Ordering(BaseModel):
    """
    A total order on the members of `domain`.

    Members are compared by `key`, the Σ*-index each one is sent to. Only
    members are ever compared.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    name: str
    domain: Language
    key: Callable[[Str], int]
    length_relation: Polynomial | None = None

    def compare(self, x: Str, y: Str) -> Comparison:
        kx, ky = self.key(x), self.key(y)
        if kx < ky:
            return Comparison.LT
        if kx > ky:
            return Comparison.GT
        return Comparison.EQ

    def weak_rank(self, x: Str) -> int:
        """1-based position of x among the members under this order."""
        return self.key(x) + 1

    def check_total(self, members: list[Str]) -> bool:
        """Antisymmetry, totality and transitivity over the given members."""
        table = {(x, y): self.compare(x, y) for x in members for y in members}
        flipped = {Comparison.LT: Comparison.GT, Comparison.GT: Comparison.LT}
        for x, y in itertools.product(members, repeat=2):
            verdict = table[x, y]
            if (verdict == Comparison.EQ) != (x == y):
                return False
            if verdict != Comparison.EQ and table[y, x] != flipped[verdict]:
                return False
        for x, y, z in itertools.product(members, repeat=3):
            chained = table[x, y] == table[y, z] == Comparison.LT
            if chained and table[x, z] != Comparison.LT:
                return False
        return True

    def is_length_related(self, members: list[Str]) -> bool:
        """x ≺ y implies |x| <= p(|y|) over the given members."""
        p = self.length_relation
        if p is None:
            return False
        return all(
            len(x) <= p(len(y))
            for x, y in itertools.product(members, repeat=2)
            if self.compare(x, y) == Comparison.LT
        )


class PolyRelationRow(BaseModel):
    n: int
    a_count: int
    b_at_p: int
    b_count: int
    a_at_q: int

    @property
    def passes(self) -> bool:
        return self.a_count <= self.b_at_p and self.b_count <= self.a_at_q


class PolyRelationReport(BaseModel):
    """Whether c_A(n) <= c_B(p(n)) and c_B(n) <= c_A(q(n)) for each tested n."""

    a: str
    b: str
    p: str
    q: str
    rows: list[PolyRelationRow]

    @property
    def passes(self) -> bool:
        return all(row.passes for row in self.rows)

    @property
    def failures(self) -> list[int]:
        return [row.n for row in self.rows if not row.passes]


class DensityVerdict(BaseModel):
    """Empirical estimate of the constant a in c_L(n) >= 2^(a·n^c)."""

    language: str
    c_exp: float
    window: tuple[int, int]
    constant: float
    passes: bool
    label: str = "empirical"
