"""Constructive Cantor–Bernstein for length-increasing invertible injections."""

import logging

from .exceptions import AuditFailure, InvariantBreachError
from .languages import enumerate_upto
from .models.chain import Chain, ChainVerdict, Injection, Origin
from .models.equipollence import Equipollence, Side
from .models.language import Language
from .models.partial_map import PartialMap
from .models.string import Str
from .witnesses import audit_map, witness

logger = logging.getLogger(__name__)


def _preimage(x: Str, f: Injection, domain: Language) -> tuple[Str | None, int]:
    """The clocked inverse of f at x, confirmed by re-applying f."""
    back = f.inverse.run(x)
    if back.value is None:
        return None, back.steps
    again = f.forward.run(back.value)
    steps = back.steps + again.steps
    if again.value != x or back.value not in domain:
        return None, steps
    return back.value, steps


def classify(
    x: Str,
    side: Side,
    p: Injection,
    q: Injection,
    a: Language,
    b: Language,
    logger: logging.Logger = logger,
) -> ChainVerdict:
    """
    Walk backwards from x until a string has no preimage.

    p maps A into B and q maps B into A. From the A side the walk asks q for a
    preimage, from the B side it asks p. The side where the walk stops holds the
    chain's source.
    """
    walk = [x]
    steps = 0
    current, at = x, side
    while True:
        if at == Side.A:
            previous, used = _preimage(current, q, b)
        else:
            previous, used = _preimage(current, p, a)
        steps += used
        if previous is None:
            break
        if len(previous) >= len(current):
            raise InvariantBreachError(
                f"maps not length-increasing: hop {current} -> {previous}"
            )
        walk.append(previous)
        if len(walk) > len(x) + 2:
            raise InvariantBreachError(f"walk from {x} exceeded {len(x) + 1} hops")
        current = previous
        at = Side.B if at == Side.A else Side.A
    origin = Origin.SOURCE_IN_A if at == Side.A else Origin.SOURCE_IN_B
    logger.debug(f"classify({x}, {side}): {origin} after {len(walk) - 1} hop(s)")
    return ChainVerdict(origin=origin, walk=walk, steps_used=steps)


def _audit(f: Injection, domain: Language, n: int) -> None:
    audit = audit_map(f.forward.model_copy(update={"domain": domain}), n)
    if not audit.injective and audit.collision is not None:
        raise AuditFailure(
            f"{f.forward.name} is not injective: {audit.collision[0]} and "
            f"{audit.collision[1]} collide",
            offending=audit.collision[1],
        )
    if not audit.length_increasing:
        raise AuditFailure(
            f"{f.forward.name} is not length-increasing at {audit.shrinking_input}",
            offending=audit.shrinking_input,
        )


def cb_witness(
    p: Injection,
    q: Injection,
    a: Language,
    b: Language,
    audit_upto: int = 8,
    logger: logging.Logger = logger,
) -> Equipollence:
    """
    Build A ≈ B from injections p: A → B and q: B → A.

    Strings whose chain starts in A travel along p; the rest travel back along q.
    Both injections are audited up to `audit_upto` first.
    """
    _audit(p, a, audit_upto)
    _audit(q, b, audit_upto)
    bound = (
        (p.forward.bound + p.inverse.bound) + (q.forward.bound + q.inverse.bound)
    ).hops()

    def phi(x: Str) -> tuple[Str | None, int]:
        verdict = classify(x, Side.A, p, q, a, b, logger=logger)
        step = p.forward if verdict.origin == Origin.SOURCE_IN_A else q.inverse
        result = step.run(x)
        return result.value, verdict.steps_used + result.steps

    def psi(y: Str) -> tuple[Str | None, int]:
        verdict = classify(y, Side.B, p, q, a, b, logger=logger)
        step = p.inverse if verdict.origin == Origin.SOURCE_IN_A else q.forward
        result = step.run(y)
        return result.value, verdict.steps_used + result.steps

    name = f"cb({p.name}, {q.name}, {a.name}, {b.name})"
    logger.info(f"Built {name} with clock {bound}")
    return witness(
        PartialMap(
            name=f"phi({name})",
            source=a.alphabet,
            target=b.alphabet,
            evaluator=phi,
            bound=bound,
            domain=a,
        ),
        PartialMap(
            name=f"psi({name})",
            source=b.alphabet,
            target=a.alphabet,
            evaluator=psi,
            bound=bound,
            domain=b,
        ),
        a,
        b,
        name=name,
    )


def chain_decomposition(
    p: Injection, q: Injection, a: Language, b: Language, n: int
) -> list[Chain]:
    """Group every member of A and B up to length n by the chain it lies on."""
    chains: dict[tuple[Origin, Str], list[tuple[Side, Str]]] = {}
    for side, lang in ((Side.A, a), (Side.B, b)):
        for x in enumerate_upto(lang, n):
            verdict = classify(x, side, p, q, a, b)
            chains.setdefault((verdict.origin, verdict.source), []).append((side, x))
    return [
        Chain(
            origin=origin,
            source=source,
            members=sorted(members, key=lambda m: (m[1].sort_key, m[0])),
        )
        for (origin, source), members in sorted(
            chains.items(), key=lambda item: (item[0][1].sort_key, item[0][0])
        )
    ]


def phi_table(e: Equipollence, n: int) -> list[tuple[Str, Str | None]]:
    return [(x, e.forward(x)) for x in enumerate_upto(e.a, n)]
