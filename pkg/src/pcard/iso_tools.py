"""Total isomorphisms, cylinders and reductions assembled from witnesses."""

import logging

from .exceptions import (
    InfiniteWitnessRequiredError,
    PreconditionError,
    UnverifiedWitnessError,
)
from .languages import census, quote, sigma_star
from .models.equipollence import Enumeration, Equipollence
from .models.language import Language
from .models.partial_map import MapEvaluator, PartialMap
from .models.polynomial import TimeBound
from .models.string import Str
from .strings import pair, rank, str_add, unpair
from .witnesses import PAIRING_BOUND, verify_equipollence, witness

logger = logging.getLogger(__name__)

VERIFY_UPTO = 5


def _require_infinite(*langs: Language) -> None:
    for lang in langs:
        if census(lang, 8) <= census(lang, 4):
            raise InfiniteWitnessRequiredError(
                f"{lang.name} has no members between lengths 5 and 8; "
                "an infinite language is required"
            )


def _require_verified(*witnesses: Equipollence, n: int = VERIFY_UPTO) -> None:
    for e in witnesses:
        report = verify_equipollence(e, n)
        if not report.clean:
            first = report.violations[0]
            raise UnverifiedWitnessError(
                f"{e.name} failed verification at {first.input} ({first.kind})"
            )


def iso_from_complements(
    e: Equipollence,
    ec: Equipollence,
    decider: Language,
    logger: logging.Logger = logger,
) -> Equipollence:
    """
    A total bijection Σ* → Γ* carrying A onto B, from A ≈ B and Ā ≈ B̄.

    The inverse runs both backward maps under their clocks and keeps the answer
    that φ sends back to the input.
    """
    alphabet, target = e.a.alphabet, e.b.alphabet

    def phi_run(x: Str) -> tuple[Str | None, int]:
        side = e.forward if x in decider else ec.forward
        result = side.run(x)
        return result.value, result.steps

    def phi_inverse(y: Str) -> tuple[Str | None, int]:
        steps = 0
        candidates: list[Str] = []
        for backward in (e.backward, ec.backward):
            result = backward.run(y)
            steps += result.steps
            if result.value is not None:
                candidates.append(result.value)
        if len(candidates) > 1:
            logger.debug(f"{y}: both inverses answered {candidates}")
        for x in candidates:
            image, used = phi_run(x)
            steps += used
            if image == y:
                return x, steps
        return None, steps

    forward_bound = e.forward.bound + ec.forward.bound
    backward_bound = (e.backward.bound + ec.backward.bound).then(forward_bound * 2)
    name = f"iso({e.name}, {ec.name})"
    return witness(
        PartialMap(
            name=f"phi({name})",
            source=alphabet,
            target=target,
            evaluator=phi_run,
            bound=forward_bound,
        ),
        PartialMap(
            name=f"phi_inverse({name})",
            source=target,
            target=alphabet,
            evaluator=phi_inverse,
            bound=backward_bound,
        ),
        sigma_star(alphabet),
        sigma_star(target),
        name=name,
    )


def ghk_iso(
    f_a: Equipollence,
    f_ac: Equipollence,
    g_b: Equipollence,
    g_bc: Equipollence,
    decider_a: Language,
    decider_b: Language,
) -> Equipollence:
    """
    A total bijection carrying B onto A, when A, Ā, B and B̄ are all ≈ Σ*.

    f tags x with 0 and applies f_a when x ∈ A, else tags with 1 and applies
    f_ac; g does the same for B. The result is f⁻¹ ∘ g.
    """
    _require_infinite(f_a.a, f_ac.a, g_b.a, g_bc.a)
    _require_verified(f_a, f_ac, g_b, g_bc)
    alphabet = decider_a.alphabet

    def tagged(
        inside: Equipollence, outside: Equipollence, decider: Language
    ) -> MapEvaluator:
        def evaluate(x: Str) -> tuple[Str | None, int]:
            tag, side = (0, inside) if x in decider else (1, outside)
            result = side.forward.run(x)
            if result.value is None:
                return None, result.steps
            return Str.trusted(alphabet, (tag,)) + result.value, result.steps + 1

        return evaluate

    def untagged(inside: Equipollence, outside: Equipollence) -> MapEvaluator:
        def evaluate(t: Str) -> tuple[Str | None, int]:
            match t.head:
                case 0:
                    side = inside
                case 1:
                    side = outside
                case _:
                    return None, 1
            result = side.backward.run(t.drop(1))
            return result.value, result.steps + 1

        return evaluate

    tag_b, tag_a = tagged(g_b, g_bc, decider_b), tagged(f_a, f_ac, decider_a)
    untag_a, untag_b = untagged(f_a, f_ac), untagged(g_b, g_bc)

    def h(x: Str) -> tuple[Str | None, int]:
        t, steps = tag_b(x)
        if t is None:
            return None, steps
        y, more = untag_a(t)
        return y, steps + more

    def h_inverse(y: Str) -> tuple[Str | None, int]:
        t, steps = tag_a(y)
        if t is None:
            return None, steps
        x, more = untag_b(t)
        return x, steps + more

    g_bound = g_b.forward.bound + g_bc.forward.bound + TimeBound(1, 1)
    f_bound = f_a.forward.bound + f_ac.forward.bound + TimeBound(1, 1)
    name = f"ghk({f_a.name}, {f_ac.name}, {g_b.name}, {g_bc.name})"
    return witness(
        PartialMap(
            name=f"h({name})",
            source=alphabet,
            target=alphabet,
            evaluator=h,
            bound=g_bound.then(f_a.backward.bound + f_ac.backward.bound),
        ),
        PartialMap(
            name=f"h_inverse({name})",
            source=alphabet,
            target=alphabet,
            evaluator=h_inverse,
            bound=f_bound.then(g_b.backward.bound + g_bc.backward.bound),
        ),
        sigma_star(alphabet),
        sigma_star(alphabet),
        name=name,
    )


def compress_extend(e: Equipollence, decider: Language) -> PartialMap:
    """E.forward on L and the identity off L."""

    def evaluate(x: Str) -> tuple[Str | None, int]:
        if x in decider:
            result = e.forward.run(x)
            return result.value, result.steps
        return x, 2 * len(x) + 1

    return PartialMap(
        name=f"compress({e.name}, {decider.name})",
        source=e.a.alphabet,
        target=e.b.alphabet,
        evaluator=evaluate,
        bound=e.forward.bound + TimeBound(2, 1),
    )


def enum_by_iteration(e: Equipollence) -> Enumeration:
    """x0 = f⁻¹(ε) and step(x) = f⁻¹(f(x) + 1) for a witness f: L ≈ Σ*."""
    alphabet = e.b.alphabet
    x0 = e.backward(Str.empty(alphabet))
    if x0 is None:
        raise PreconditionError(f"{e.backward.name} is undefined on the empty string")

    def move(by: int) -> MapEvaluator:
        def evaluate(x: Str) -> tuple[Str | None, int]:
            there = e.forward.run(x)
            if there.value is None or rank(there.value) + by < 0:
                return None, there.steps
            shifted = str_add(there.value, by)
            back = e.backward.run(shifted)
            return back.value, there.steps + back.steps + len(shifted) + 1

        return evaluate

    bound = e.forward.bound.then(TimeBound(2, 1)).then(e.backward.bound)
    return Enumeration(
        x0=x0,
        step=PartialMap(
            name=f"next({e.name})",
            source=e.a.alphabet,
            target=e.a.alphabet,
            evaluator=move(1),
            bound=bound,
        ),
        step_inverse=PartialMap(
            name=f"previous({e.name})",
            source=e.a.alphabet,
            target=e.a.alphabet,
            evaluator=move(-1),
            bound=bound,
        ),
    )


def reduction_from_witness(e: Equipollence, a0: Str) -> PartialMap:
    """
    A many-one reduction from B to A.

    Run the backward map under its clock; keep its answer only if the forward
    map sends it back to the input. Everything else goes to a0, a fixed
    non-member of A.
    """
    if a0 in e.a:
        raise PreconditionError(f"{a0} is in {e.a.name}; a non-member is required")

    def evaluate(x: Str) -> tuple[Str | None, int]:
        back = e.backward.run(x)
        if back.value is None:
            return a0, back.steps + len(a0) + 1
        there = e.forward.run(back.value)
        steps = back.steps + there.steps
        if there.value != x:
            return a0, steps + len(a0) + 1
        return back.value, steps

    return PartialMap(
        name=f"reduce({e.name}, {quote(a0)})",
        source=e.b.alphabet,
        target=e.a.alphabet,
        evaluator=evaluate,
        bound=e.backward.bound.then(e.forward.bound) + TimeBound(len(a0) + 2, 1),
    )


def decider_from_reduction(r: PartialMap, decider: Language) -> Language:
    """x ∈ B iff r(x) ∈ A."""

    def evaluate(x: Str) -> tuple[bool, int]:
        result = r.run(x)
        if result.value is None:
            return False, result.steps
        member, steps = decider.evaluator(result.value)
        return member, result.steps + steps

    return Language(
        name=f"decide_via({r.name}, {decider.name})",
        alphabet=r.source,
        evaluator=evaluate,
        fuel_limit=decider.fuel_limit,
    )


def cylinder_witness(
    e_a: Equipollence, e_ac: Equipollence, decider: Language
) -> Equipollence:
    """
    A total bijection Σ* → Σ* carrying A onto A×Σ*.

    A member x is numbered by e_a, the number is split into a pair (i, j), and
    the result pairs e_a⁻¹(i) with j. Non-members go the same way through e_ac.
    """
    _require_infinite(e_ac.a)
    _require_verified(e_a, e_ac)
    alphabet = decider.alphabet

    def split(x: Str) -> tuple[Str | None, int]:
        side = e_a if x in decider else e_ac
        there = side.forward.run(x)
        if there.value is None:
            return None, there.steps
        i, j = unpair(there.value)
        back = side.backward.run(i)
        if back.value is None:
            return None, there.steps + back.steps
        out = pair(back.value, j)
        return out, there.steps + back.steps + len(there.value) + len(out) + 1

    def join(y: Str) -> tuple[Str | None, int]:
        u, v = unpair(y)
        side = e_a if u in decider else e_ac
        there = side.forward.run(u)
        if there.value is None:
            return None, there.steps
        s = pair(there.value, v)
        back = side.backward.run(s)
        return back.value, there.steps + back.steps + len(y) + len(s) + 1

    def chain(e: Equipollence) -> TimeBound:
        return e.forward.bound.then(PAIRING_BOUND).then(e.backward.bound).then(
            PAIRING_BOUND
        )

    name = f"cylinder({e_a.name}, {e_ac.name})"
    bound = (chain(e_a) + chain(e_ac)) * 4
    return witness(
        PartialMap(
            name=f"split({name})",
            source=alphabet,
            target=alphabet,
            evaluator=split,
            bound=bound,
        ),
        PartialMap(
            name=f"join({name})",
            source=alphabet,
            target=alphabet,
            evaluator=join,
            bound=bound,
        ),
        sigma_star(alphabet),
        sigma_star(alphabet),
        name=name,
    )
