"""State, catalog and trace records for the stage construction."""

from .._compat import StrEnum
from typing import Any

from pydantic import BaseModel, ConfigDict

from ..exceptions import InvariantBreachError
from .language import Language
from .partial_map import PartialMap
from .string import Str


class CatalogEntry(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    name: str
    alpha: PartialMap
    beta: PartialMap


class MachineCatalog(BaseModel):
    """Finitely many (M_α, M_β) pairs, in Cantor pairing order of their indices."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    entries: list[CatalogEntry]

    @classmethod
    def from_machines(cls, machines: list[PartialMap], count: int) -> "MachineCatalog":
        # late import: strings depends on models
        from ..strings import cantor_unpair

        entries: list[CatalogEntry] = []
        z = 0
        limit = len(machines)
        while len(entries) < count and z < (2 * limit) ** 2:
            i, j = cantor_unpair(z)
            z += 1
            if i < limit and j < limit:
                alpha, beta = machines[i], machines[j]
                entries.append(
                    CatalogEntry(
                        name=f"({alpha.name}, {beta.name})", alpha=alpha, beta=beta
                    )
                )
        return cls(entries=entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, k: int) -> CatalogEntry:
        return self.entries[k]


class StageKind(StrEnum):
    GROW = "grow"
    R1 = "R1"
    R2 = "R2"
    IDLE = "idle"


class StageVerdict(StrEnum):
    APPLIED = "applied"
    INCONCLUSIVE = "inconclusive"
    IDLE = "idle"


class StageRecord(BaseModel):
    model_config = ConfigDict(frozen=True)

    stage: int
    kind: StageKind
    pair: int | None = None
    case: str | None = None
    subcase: str | None = None
    added: list[Str] = []
    excluded: list[Str] = []
    verdict: StageVerdict = StageVerdict.APPLIED

    def to_dict(self) -> dict[str, Any]:
        return {
            "stage": self.stage,
            "kind": self.kind.value,
            "pair": self.pair,
            "case": self.case,
            "subcase": self.subcase,
            "added": [str(s) for s in self.added],
            "excluded": [str(s) for s in self.excluded],
            "verdict": self.verdict.value,
        }


class DiagState(BaseModel):
    """
    The construction after `stage` stages: C = A ∪ added, E = excluded.

    Both lists only ever grow, in the order strings were chosen.
    """

    model_config = ConfigDict(frozen=True)

    stage: int = 0
    added: list[Str] = []
    excluded: list[Str] = []
    log: list[StageRecord] = []

    def check_invariants(self, a: Language, b: Language) -> None:
        """C ∩ E = ∅, A ⊆ C ⊆ B and E ⊆ B \\ C on the recorded strings."""
        for x in self.added:
            if x not in b:
                raise InvariantBreachError(f"{x} was added to C but is not in {b.name}")
            if x in self.excluded:
                raise InvariantBreachError(f"{x} is both in C and excluded")
        for x in self.excluded:
            if x not in b:
                raise InvariantBreachError(f"{x} was excluded but is not in {b.name}")
            if x in a:
                raise InvariantBreachError(f"{x} was excluded but is in {a.name} ⊆ C")
        if len(set(self.added)) != len(self.added):
            raise InvariantBreachError("C lists a string twice")
        if len(set(self.excluded)) != len(self.excluded):
            raise InvariantBreachError("E lists a string twice")


class Verdict(StrEnum):
    SATISFIED = "satisfied"
    UNSATISFIED = "unsatisfied"
    INCONCLUSIVE = "inconclusive"


class RequirementStatus(BaseModel):
    model_config = ConfigDict(frozen=True)

    verdict: Verdict
    clause: str | None = None

    def __str__(self) -> str:
        if self.clause is not None:
            return f"{self.verdict.value}({self.clause})"
        return self.verdict.value


class PairRequirements(BaseModel):
    index: int
    name: str
    r1: RequirementStatus
    r2: RequirementStatus

    def to_dict(self) -> dict[str, Any]:
        return {
            "index": self.index,
            "name": self.name,
            "R1": str(self.r1),
            "R2": str(self.r2),
        }
