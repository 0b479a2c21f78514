"""
A bounded-horizon simulator of the staged construction of C with A ⊆ C ⊆ B.

Stage s ≡ 0 (mod 3) grows C by the least string of B \\ (C ∪ E). Stages
3k+1 and 3k+2 work on catalog entry k, trying to make sure that the pair
(M_α, M_β) witnesses neither A ≈ C nor C ≈ B. Every case predicate is
decided by exhaustive search over strings up to the horizon H; a search that
finds nothing there leaves the state alone with an INCONCLUSIVE verdict.
"""

import logging
from collections.abc import Callable, Iterable

from .languages import enumerate_upto
from .maps import identity, prepend, strip
from .models.diag import (
    DiagState,
    MachineCatalog,
    PairRequirements,
    RequirementStatus,
    StageKind,
    StageRecord,
    StageVerdict,
    Verdict,
)
from .models.language import Language
from .models.partial_map import PartialMap
from .models.string import Str

logger = logging.getLogger(__name__)


def _collision(f: PartialMap, xs: Iterable[Str]) -> tuple[Str, Str] | None:
    """The first two inputs, in order, that f sends to the same defined value."""
    seen: dict[Str, Str] = {}
    for x in xs:
        y = f(x)
        if y is None:
            continue
        if y in seen:
            return seen[y], x
        seen[y] = x
    return None


def _not_witnessed_on(
    alpha: PartialMap, beta: PartialMap, domain: list[Str], target: Language
) -> str | None:
    """Why alpha on domain is not an equipollence into target with inverse beta."""
    for x in domain:
        y = alpha(x)
        if y is None:
            return f"{alpha.name} undefined at {x}"
        if y not in target:
            return f"{alpha.name}({x}) = {y} leaves {target.name}"
        if beta(y) != x:
            return f"{beta.name} does not send {y} back to {x}"
    if (pair := _collision(alpha, domain)) is not None:
        return f"{alpha.name} identifies {pair[0]} and {pair[1]}"
    return None


class _Snapshot:
    """Members of A and B up to the horizon, with C and E as of one state."""

    def __init__(
        self, state: DiagState, a: Language, b: Language, horizon: int
    ) -> None:
        self.a = a
        self.b = b
        self.horizon = horizon
        self.a_members = enumerate_upto(a, horizon)
        self.b_members = enumerate_upto(b, horizon)
        self.added = set(state.added)
        self.excluded = set(state.excluded)
        self.c_members = sorted(set(self.a_members) | self.added)

    def in_c(self, x: Str) -> bool:
        return x in self.added or x in self.a

    def open_verdict(self) -> Verdict:
        if any(len(x) == self.horizon for x in self.b_members):
            return Verdict.INCONCLUSIVE
        return Verdict.UNSATISFIED


def _grow(snap: _Snapshot, stage: int) -> StageRecord:
    for x in snap.b_members:
        if not snap.in_c(x) and x not in snap.excluded:
            return StageRecord(stage=stage, kind=StageKind.GROW, added=[x])
    return StageRecord(
        stage=stage, kind=StageKind.GROW, verdict=StageVerdict.INCONCLUSIVE
    )


def _first(xs: Iterable[Str], test: Callable[[Str], bool]) -> Str | None:
    return next((x for x in xs if test(x)), None)


def _r1_stage(
    snap: _Snapshot,
    stage: int,
    k: int,
    alpha: PartialMap,
    beta: PartialMap,
    logger: logging.Logger,
) -> StageRecord:
    reason = _not_witnessed_on(alpha, beta, snap.a_members, snap.b)
    if reason is not None:
        logger.debug(f"stage {stage}: R1 case 1 for pair {k}: {reason}")
        return StageRecord(stage=stage, kind=StageKind.R1, pair=k, case="1")

    ys = [y for y in snap.b_members if y not in snap.excluded]
    images = {y: beta(y) for y in ys}
    picks: list[Str] | None = None
    subcase = None
    if (y := _first(ys, lambda y: images[y] is None)) is not None:
        picks, subcase = [y], "2.1"
    elif (pair := _collision(beta, ys)) is not None:
        picks, subcase = list(pair), "2.2"
    elif (y := _first(ys, lambda y: images[y] not in snap.a)) is not None:
        picks, subcase = [y], "2.3"
    elif (
        y := _first(ys, lambda y: (z := images[y]) is not None and alpha(z) != y)
    ) is not None:
        picks, subcase = [y], "2.4"

    if picks is None:
        return StageRecord(
            stage=stage,
            kind=StageKind.R1,
            pair=k,
            case="2",
            verdict=StageVerdict.INCONCLUSIVE,
        )
    logger.debug(f"stage {stage}: R1 subcase {subcase} for pair {k} picks {picks}")
    return StageRecord(
        stage=stage,
        kind=StageKind.R1,
        pair=k,
        case="2",
        subcase=subcase,
        added=[y for y in picks if not snap.in_c(y)],
    )


def _r2_stage(
    snap: _Snapshot,
    stage: int,
    k: int,
    alpha: PartialMap,
    beta: PartialMap,
    logger: logging.Logger,
) -> StageRecord:
    def unchanged(subcase: str, why: str) -> StageRecord:
        logger.debug(f"stage {stage}: R2 case {subcase} for pair {k}: {why}")
        return StageRecord(
            stage=stage, kind=StageKind.R2, pair=k, case="1", subcase=subcase
        )

    for c in snap.c_members:
        y = alpha(c)
        if y is not None and y not in snap.b:
            return unchanged("1.1", f"{alpha.name}({c}) = {y} leaves {snap.b.name}")
    reason = _not_witnessed_on(alpha, beta, snap.c_members, snap.b)
    if reason is not None:
        return unchanged("1.2", reason)

    covered = {alpha(c) for c in snap.c_members}
    xs = [x for x in snap.b_members if x not in covered and x not in snap.excluded]
    if not xs:
        return StageRecord(
            stage=stage, kind=StageKind.R2, pair=k, verdict=StageVerdict.INCONCLUSIVE
        )
    images: dict[Str, Str] = {}
    for x in xs:
        z = beta(x)
        if z is None:
            return unchanged("1.3", f"{beta.name} undefined at {x}")
        images[x] = z
    found = _first(xs, lambda x: not snap.in_c(images[x]))
    if found is None:
        return unchanged("1.4", f"{beta.name} maps the rest of B into C")

    z = images[found]
    excluded = [z] if z in snap.b and z not in snap.excluded else []
    logger.debug(
        f"stage {stage}: R2 case 2 for pair {k} at {found}, excluding {excluded}"
    )
    return StageRecord(
        stage=stage, kind=StageKind.R2, pair=k, case="2", excluded=excluded
    )


def run_stage(
    state: DiagState,
    a: Language,
    b: Language,
    catalog: MachineCatalog,
    horizon: int,
    logger: logging.Logger = logger,
) -> DiagState:
    """Advance the construction by one stage."""
    s = state.stage
    snap = _Snapshot(state, a, b, horizon)
    k, phase = divmod(s - 1, 3) if s % 3 else (None, None)
    if k is None:
        record = _grow(snap, s)
    elif k >= len(catalog):
        record = StageRecord(
            stage=s, kind=StageKind.IDLE, pair=k, verdict=StageVerdict.IDLE
        )
    else:
        entry = catalog[k]
        if phase == 0:
            record = _r1_stage(snap, s, k, entry.alpha, entry.beta, logger)
        else:
            record = _r2_stage(snap, s, k, entry.alpha, entry.beta, logger)
    if record.verdict == StageVerdict.INCONCLUSIVE:
        logger.warning(f"stage {s} ({record.kind}) inconclusive at horizon {horizon}")

    nxt = DiagState(
        stage=s + 1,
        added=state.added + record.added,
        excluded=state.excluded + record.excluded,
        log=state.log + [record],
    )
    nxt.check_invariants(a, b)
    return nxt


def _status(snap: _Snapshot, *clauses: tuple[str, bool]) -> RequirementStatus:
    for clause, holds in clauses:
        if holds:
            return RequirementStatus(verdict=Verdict.SATISFIED, clause=clause)
    return RequirementStatus(verdict=snap.open_verdict())


def _partial_or_collides(f: PartialMap, xs: list[Str]) -> bool:
    return any(f(x) is None for x in xs) or _collision(f, xs) is not None


def _escapes(f: PartialMap, xs: list[Str], target: Language) -> bool:
    return any((y := f(x)) is not None and y not in target for x in xs)


def _not_inverse(f: PartialMap, g: PartialMap, xs: list[Str]) -> bool:
    """Some x where f is defined and g does not send f(x) back to x."""
    return any((y := f(x)) is not None and g(y) != x for x in xs)


def _r1_status(
    snap: _Snapshot, alpha: PartialMap, beta: PartialMap
) -> RequirementStatus:
    a_members, c_members = snap.a_members, snap.c_members
    return _status(
        snap,
        ("a", _partial_or_collides(alpha, a_members)),
        ("b", _partial_or_collides(beta, c_members)),
        ("c", _escapes(alpha, a_members, snap.b)),
        ("d", _escapes(beta, c_members, snap.a)),
        (
            "e",
            _not_inverse(alpha, beta, a_members)
            or _not_inverse(beta, alpha, c_members),
        ),
    )


def _r2_status(
    snap: _Snapshot, alpha: PartialMap, beta: PartialMap
) -> RequirementStatus:
    b_members, c_members = snap.b_members, snap.c_members
    # (d): M_β(B) meets E or leaves B
    hits_excluded = any(
        (y := beta(x)) is not None and (y in snap.excluded or y not in snap.b)
        for x in b_members
    )
    return _status(
        snap,
        ("a", _partial_or_collides(alpha, c_members)),
        ("b", _partial_or_collides(beta, b_members)),
        ("c", _escapes(alpha, c_members, snap.b)),
        ("d", hits_excluded),
        (
            "e",
            _not_inverse(alpha, beta, c_members)
            or _not_inverse(beta, alpha, b_members),
        ),
    )


def check_requirements(
    state: DiagState, a: Language, b: Language, catalog: MachineCatalog, horizon: int
) -> list[PairRequirements]:
    """The first clause of R1 and of R2 that holds for each catalog pair."""
    snap = _Snapshot(state, a, b, horizon)
    return [
        PairRequirements(
            index=k,
            name=entry.name,
            r1=_r1_status(snap, entry.alpha, entry.beta),
            r2=_r2_status(snap, entry.alpha, entry.beta),
        )
        for k, entry in enumerate(catalog.entries)
    ]


def construction_language(state: DiagState, a: Language, b: Language) -> Language:
    added = frozenset(state.added)

    def evaluate(x: Str) -> tuple[bool, int]:
        if x in added:
            return True, len(x) + 1
        return a.evaluator(x)

    return Language(
        name=f"diag_C({a.name}, {b.name})",
        alphabet=a.alphabet,
        evaluator=evaluate,
        fuel_limit=a.fuel_limit,
    )


def run_construction(
    a: Language,
    b: Language,
    catalog: MachineCatalog,
    stages: int,
    horizon: int,
    logger: logging.Logger = logger,
) -> tuple[DiagState, Language]:
    """
    Run `stages` stages from the empty state and return C as a language.

    The caller asserts that A is much smaller than B; nothing here checks it.
    """
    state = DiagState()
    for _ in range(stages):
        state = run_stage(state, a, b, catalog, horizon, logger=logger)
    logger.info(
        f"diag({a.name}, {b.name}): {stages} stages, |C \\ A| = {len(state.added)}, "
        f"|E| = {len(state.excluded)}"
    )
    return state, construction_language(state, a, b)


def default_catalog(size: int = 2) -> MachineCatalog:
    """Six pairs built from the identity, prepend "0" and strip "0"."""
    zero = Str.of(size, "0")
    machines = [identity(size), prepend(zero), strip(zero)]
    return MachineCatalog.from_machines(machines, 6)
