"""Finite variations: rank transfer, countability transfer and the offset criterion."""

import logging

from .exceptions import OffsetMismatchError, PreconditionError
from .languages import members_between
from .models.equipollence import Equipollence
from .models.findiff import FiniteDiff, PredecessorReport, ShiftFn
from .models.language import Language
from .models.partial_map import PartialMap
from .models.polynomial import TimeBound
from .models.string import Str
from .strings import rank, unrank
from .witnesses import witness

logger = logging.getLogger(__name__)


def shift_function(d: FiniteDiff) -> ShiftFn:
    """σ with rk_B(x) = rk_A(x) + σ(x), stepping at each string of P ∪ N."""
    added = set(d.added)
    values = [0]
    for z in d.touched:
        values.append(values[-1] + (1 if z in added else -1))
    return ShiftFn(breakpoints=d.touched, values=values)


def _padded(bound: TimeBound, pad: int) -> TimeBound:
    """A bound good for inputs up to `pad` symbols longer, plus `pad` output."""
    return bound * (2 * (1 + pad) ** bound.e) + TimeBound(pad + 2, 1)


def transfer_countability(
    e: Equipollence, d: FiniteDiff, logger: logging.Logger = logger
) -> Equipollence:
    """
    Σ* ≈ B from Σ* ≈ A, for B a finite variation of A.

    Index i first lists P, then follows e shifted by |P|. Indices landing on N
    are skipped, and the remaining ones are renumbered consecutively.
    """
    base = d.base
    if e.b == base:
        enum = e
    elif e.a == base:
        enum = e.inverse()
    else:
        raise PreconditionError(f"{e.name} does not enumerate {base.name}")
    if not d.added and not d.removed:
        return enum

    alphabet = base.alphabet
    added = d.added
    s = len(added)
    skipped: list[int] = []
    for m in d.removed:
        pre = enum.backward(m)
        if pre is None:
            raise PreconditionError(f"{m} has no index under {enum.name}")
        skipped.append(s + rank(pre))
    skipped.sort()
    logger.debug(f"transfer over {d.derived().name}: skipping indices {skipped}")
    pad = max(d.max_length, len(unrank(s + len(skipped), alphabet))) + 1

    def lift(i: int) -> int:
        for j in skipped:
            if j <= i:
                i += 1
        return i

    def forward(x: Str) -> tuple[Str | None, int]:
        j = lift(rank(x))
        if j < s:
            return added[j], len(x) + len(added[j]) + 1
        result = enum.forward.run(unrank(j - s, alphabet))
        return result.value, result.steps + len(x) + 1

    def backward(y: Str) -> tuple[Str | None, int]:
        if y in added:
            j, steps = added.index(y), len(y) + 1
        else:
            result = enum.backward.run(y)
            if result.value is None:
                return None, result.steps + 1
            j, steps = s + rank(result.value), result.steps + len(y) + 1
        if j in skipped:
            return None, steps
        out = unrank(j - sum(1 for k in skipped if k < j), alphabet)
        return out, steps + len(out)

    derived = d.derived()
    name = f"transfer({enum.name}, {derived.name})"
    return witness(
        PartialMap(
            name=f"forward({name})",
            source=alphabet,
            target=alphabet,
            evaluator=forward,
            bound=_padded(enum.forward.bound, pad),
        ),
        PartialMap(
            name=f"backward({name})",
            source=alphabet,
            target=alphabet,
            evaluator=backward,
            bound=_padded(enum.backward.bound, pad),
            domain=derived,
        ),
        enum.a,
        derived,
        name=name,
    )


def _short_members(d1: FiniteDiff, d2: FiniteDiff) -> tuple[int, list[Str], list[Str]]:
    n0 = 1 + max(d1.max_length, d2.max_length)
    if n0 <= 0:
        return 0, [], []
    first = members_between(d1.derived(), 0, n0 - 1)
    second = members_between(d2.derived(), 0, n0 - 1)
    return n0, first, second


def _check_base(d1: FiniteDiff, d2: FiniteDiff) -> None:
    if d1.base != d2.base:
        raise PreconditionError(
            f"Finite differences over different bases: {d1.base.name}, {d2.base.name}"
        )


def _table_map(name: str, table: dict[Str, Str], n0: int, d: FiniteDiff) -> PartialMap:
    def apply(x: Str) -> Str | None:
        if len(x) < n0:
            return table.get(x)
        return x

    alphabet = d.base.alphabet
    return PartialMap.from_function(
        name, alphabet, alphabet, apply, TimeBound(n0 + 2, 1), domain=d.derived()
    )


def findiff_witness(d1: FiniteDiff, d2: FiniteDiff) -> Equipollence:
    """
    B₁ ≈ B₂ for two finite variations of one base with equal offsets.

    Members shorter than n₀ = 1 + the longest changed string are paired in
    length-lex order; longer strings map to themselves.
    """
    _check_base(d1, d2)
    if d1.offset != d2.offset:
        raise OffsetMismatchError(
            f"cardinality offsets differ ({d1.offset} vs {d2.offset}); "
            "no witness via this construction"
        )
    n0, first, second = _short_members(d1, d2)
    b1, b2 = d1.derived(), d2.derived()
    name = f"findiff_w({b1.name}, {b2.name})"
    return witness(
        _table_map(f"forward({name})", dict(zip(first, second, strict=True)), n0, d1),
        _table_map(f"backward({name})", dict(zip(second, first, strict=True)), n0, d2),
        b1,
        b2,
        name=name,
    )


def findiff_injection(d1: FiniteDiff, d2: FiniteDiff) -> PartialMap:
    """An injection B₁ → B₂, available when offset(d1) <= offset(d2)."""
    _check_base(d1, d2)
    if d1.offset > d2.offset:
        raise OffsetMismatchError(
            f"offset {d1.offset} exceeds {d2.offset}; "
            "no injection via this construction"
        )
    n0, first, second = _short_members(d1, d2)
    table = dict(zip(first, second[: len(first)], strict=True))
    return _table_map(
        f"findiff_injection({d1.derived().name}, {d2.derived().name})", table, n0, d1
    )


def immediate_predecessor(base: Language, x: Str) -> PredecessorReport:
    """A \\ {x} embeds into A while the offset criterion rules out a witness."""
    smaller = FiniteDiff(base=base, removed=[x])
    whole = FiniteDiff(base=base)
    injection = findiff_injection(smaller, whole)
    try:
        findiff_witness(smaller, whole)
    except OffsetMismatchError as e:
        return PredecessorReport(
            base=base.name,
            removed=x,
            injection=injection,
            witness_rejected=True,
            reason=str(e),
        )
    return PredecessorReport(
        base=base.name,
        removed=x,
        injection=injection,
        witness_rejected=False,
        reason="offsets agree",
    )
