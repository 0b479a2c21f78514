"""Models for the p-cardinality toolkit."""

from .alphabet import Alphabet
from .chain import Chain, ChainVerdict, Injection, Origin
from .collection import (
    Collection,
    DisjointnessReport,
    HonestyReport,
    MultiMap,
    RefinementReport,
    SliceVerdict,
)
from .diag import (
    CatalogEntry,
    DiagState,
    MachineCatalog,
    PairRequirements,
    RequirementStatus,
    StageKind,
    StageRecord,
    StageVerdict,
    Verdict,
)
from .equipollence import (
    EmbeddingPair,
    Enumeration,
    Equipollence,
    MapAudit,
    Side,
    VerificationReport,
    Violation,
    ViolationKind,
)
from .findiff import FiniteDiff, PredecessorReport, ShiftFn
from .language import CensusTable, Language, Membership
from .ordering import (
    Comparison,
    DensityVerdict,
    Ordering,
    PolyRelationReport,
    PolyRelationRow,
)
from .partial_map import MapResult, PartialMap
from .polynomial import Polynomial, TimeBound
from .string import Str

__all__ = [
    "Alphabet",
    "Str",
    "Polynomial",
    "TimeBound",
    "Language",
    "Membership",
    "CensusTable",
    "PartialMap",
    "MapResult",
    "Equipollence",
    "EmbeddingPair",
    "Enumeration",
    "Side",
    "Violation",
    "ViolationKind",
    "VerificationReport",
    "MapAudit",
    "Injection",
    "Origin",
    "ChainVerdict",
    "Chain",
    "Comparison",
    "Ordering",
    "PolyRelationRow",
    "PolyRelationReport",
    "DensityVerdict",
    "FiniteDiff",
    "ShiftFn",
    "PredecessorReport",
    "Collection",
    "MultiMap",
    "SliceVerdict",
    "HonestyReport",
    "DisjointnessReport",
    "RefinementReport",
    "CatalogEntry",
    "MachineCatalog",
    "DiagState",
    "StageKind",
    "StageRecord",
    "StageVerdict",
    "Verdict",
    "RequirementStatus",
    "PairRequirements",
]
