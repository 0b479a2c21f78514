"""Equipollence witnesses: verification, audits, canonical witnesses and combinators.

A witness is named by the expression that builds it, so every name printed in a
report can be pasted back into the command-line expression language.
"""

import logging
from collections.abc import Callable

from .exceptions import AlphabetMismatchError, EndpointMismatchError
from .languages import (
    as_alphabet,
    dedekind,
    empty,
    enumerate_upto,
    ensure_enumerable,
    finite,
    oplus,
    prefix,
    quote,
    shift_set,
    sigma_star,
    times,
)
from .maps import compose_maps, flip_head, identity, prepend, rehead, strip
from .models.alphabet import Alphabet
from .models.equipollence import (
    EmbeddingPair,
    Equipollence,
    MapAudit,
    Side,
    VerificationReport,
    Violation,
    ViolationKind,
)
from .models.language import Language
from .models.partial_map import PartialMap, overrun
from .models.polynomial import TimeBound
from .models.string import Str
from .strings import convert_alphabet, pair, rank, str_add, unpair, unrank

logger = logging.getLogger(__name__)

PAIRING_BOUND = TimeBound(16, 1)


# Verification


def verify_equipollence(
    witness: Equipollence,
    n: int,
    logger: logging.Logger = logger,
) -> VerificationReport:
    """
    Check a claimed equipollence on every member of A and B up to length n.

    A-side inputs must map into B and come back unchanged. Every failure seen
    from the B side is a round-trip failure, except runs that only failed
    because they exceeded their clock.
    """
    ensure_enumerable(witness.a.alphabet, n)
    ensure_enumerable(witness.b.alphabet, n)
    forward, backward = witness.forward, witness.backward
    violations: list[Violation] = []
    max_steps: dict[int, int] = {}

    def observe(x: Str, steps: int) -> None:
        max_steps[len(x)] = max(max_steps.get(len(x), 0), steps)

    for x in enumerate_upto(witness.a, n):
        there = forward.run(x)
        observe(x, there.steps)
        if there.clocked_out:
            violations.append(
                Violation(
                    input=x,
                    kind=ViolationKind.CLOCK_BREACH,
                    side=Side.A,
                    detail=f"{forward.name} took {there.steps} steps",
                )
            )
            continue
        y = there.value
        if y is None:
            violations.append(
                Violation(input=x, kind=ViolationKind.UNDEFINED, side=Side.A)
            )
            continue
        if y not in witness.b:
            violations.append(
                Violation(
                    input=x,
                    kind=ViolationKind.ESCAPES_CODOMAIN,
                    side=Side.A,
                    detail=f"{y} is not in {witness.b.name}",
                )
            )
            continue
        back = backward.run(y)
        if back.clocked_out:
            violations.append(
                Violation(
                    input=x,
                    kind=ViolationKind.CLOCK_BREACH,
                    side=Side.A,
                    detail=f"{backward.name} took {back.steps} steps on {y}",
                )
            )
        elif back.value != x:
            violations.append(
                Violation(
                    input=x,
                    kind=ViolationKind.ROUNDTRIP_FAILURE,
                    side=Side.A,
                    detail=f"{x} -> {y} -> {back.value}",
                )
            )

    for y in enumerate_upto(witness.b, n):
        back = backward.run(y)
        observe(y, back.steps)
        if back.clocked_out:
            violations.append(
                Violation(
                    input=y,
                    kind=ViolationKind.CLOCK_BREACH,
                    side=Side.B,
                    detail=f"{backward.name} took {back.steps} steps",
                )
            )
            continue
        x = back.value
        if x is None:
            detail = f"{backward.name} is undefined"
        elif x not in witness.a:
            detail = f"{x} is not in {witness.a.name}"
        else:
            there = forward.run(x)
            if there.clocked_out:
                violations.append(
                    Violation(
                        input=y,
                        kind=ViolationKind.CLOCK_BREACH,
                        side=Side.B,
                        detail=f"{forward.name} took {there.steps} steps on {x}",
                    )
                )
                continue
            if there.value == y:
                continue
            detail = f"{y} -> {x} -> {there.value}"
        violations.append(
            Violation(
                input=y,
                kind=ViolationKind.ROUNDTRIP_FAILURE,
                side=Side.B,
                detail=detail,
            )
        )

    report = VerificationReport(
        witness=witness.name,
        checked_up_to=n,
        violations=violations,
        max_steps=max_steps,
    )
    breaches = report.of_kind(ViolationKind.CLOCK_BREACH)
    if breaches:
        logger.warning(f"{witness.name}: {len(breaches)} clock breach(es) up to {n}")
    logger.info(report.summary())
    return report


def _honesty_exponent(x: Str, y: Str) -> int:
    """Least k with |x| <= |y|^k + k."""
    k = 0
    while len(y) ** k + k < len(x):
        k += 1
    return k


def audit_map(f: PartialMap, n: int, logger: logging.Logger = logger) -> MapAudit:
    """Injectivity, honesty and length increase of f on its domain up to length n."""
    domain = f.domain if f.domain is not None else sigma_star(f.source)
    seen: dict[Str, Str] = {}
    collision: tuple[Str, Str] | None = None
    shrinking: Str | None = None
    honest_with = 0
    for x in enumerate_upto(domain, n):
        y = f(x)
        if y is None:
            continue
        if collision is None and y in seen:
            collision = (seen[y], x)
            logger.debug(f"{f.name}: {seen[y]} and {x} both map to {y}")
        seen.setdefault(y, x)
        if shrinking is None and len(y) <= len(x):
            shrinking = x
        honest_with = max(honest_with, _honesty_exponent(x, y))
    return MapAudit(
        map=f.name,
        checked_up_to=n,
        injective=collision is None,
        collision=collision,
        honest_with=honest_with,
        length_increasing=shrinking is None,
        shrinking_input=shrinking,
    )


# Canonical witnesses


def witness(
    forward: PartialMap,
    backward: PartialMap,
    a: Language,
    b: Language,
    name: str | None = None,
) -> Equipollence:
    return Equipollence(
        name=name or f"witness({forward.name}, {backward.name}, {a.name}, {b.name})",
        forward=forward,
        backward=backward,
        a=a,
        b=b,
    )


def inverse(e: Equipollence) -> Equipollence:
    return e.inverse()


def identity_witness(lang: Language) -> Equipollence:
    f = identity(lang.alphabet, domain=lang)
    return witness(f, f, lang, lang, name=f"identity_w({lang.name})")


def prepend_witness(w: Str, lang: Language | None = None) -> Equipollence:
    """L ≈ w·L by prepending w; L defaults to Σ*."""
    a = lang if lang is not None else sigma_star(w.alphabet)
    name = f"prepend_w({quote(w)})"
    if lang is not None:
        name = f"prepend_w({quote(w)}, {lang.name})"
    return witness(prepend(w), strip(w), a, prefix(w, lang), name=name)


def sigma_self_sum(size: Alphabet | int) -> Equipollence:
    """Σ* ≈ Σ*⊕Σ*: even ranks go to the 0-branch, odd ranks to the 1-branch."""
    alphabet = as_alphabet(size)
    zero, one = Str.trusted(alphabet, (0,)), Str.trusted(alphabet, (1,))

    def split(x: Str) -> Str:
        half, odd = divmod(rank(x), 2)
        return (one if odd else zero) + unrank(half, alphabet)

    def merge(y: Str) -> Str | None:
        if y.head not in (0, 1):
            return None
        return unrank(2 * rank(y.drop(1)) + y.symbols[0], alphabet)

    k = alphabet.size
    forward = PartialMap.from_function(
        f"split({k})", alphabet, alphabet, split, TimeBound(2, 1)
    )
    backward = PartialMap.from_function(
        f"merge({k})", alphabet, alphabet, merge, TimeBound(3, 1)
    )
    sigma = sigma_star(alphabet)
    return witness(
        forward, backward, sigma, oplus(sigma, sigma), name=f"sigma_self_sum({k})"
    )


def sigma_self_product(size: Alphabet | int) -> Equipollence:
    """
    Σ* ≈ Σ*×Σ*.

    Products are pair-encoded and pairing is a bijection on Σ*, so every
    string already encodes exactly one pair and Σ*×Σ* is Σ* itself. Both
    directions are the identity.
    """
    alphabet = as_alphabet(size)
    sigma = sigma_star(alphabet)
    return witness(
        identity(alphabet),
        identity(alphabet),
        sigma,
        times(sigma, sigma),
        name=f"sigma_self_product({alphabet.size})",
    )


def shift_witness(size: Alphabet | int, n: int) -> Equipollence:
    """Σ* ≈ Σ* minus its first n strings, moving every string up n places."""
    alphabet = as_alphabet(size)
    k = alphabet.size
    c = len(unrank(n, alphabet)) + 2
    forward = PartialMap.from_function(
        f"add({k}, {n})", alphabet, alphabet, lambda x: str_add(x, n), TimeBound(c, 1)
    )
    backward = PartialMap.from_function(
        f"add({k}, {-n})",
        alphabet,
        alphabet,
        lambda y: str_add(y, -n) if rank(y) >= n else None,
        TimeBound(2, 1),
    )
    return witness(
        forward,
        backward,
        sigma_star(alphabet),
        shift_set(alphabet, n),
        name=f"shift({k}, {n})",
    )


def alphabet_witness(source: Alphabet | int, target: Alphabet | int) -> Equipollence:
    """Σ* ≈ Γ* by keeping ranks and changing the alphabet."""
    sigma, gamma = as_alphabet(source), as_alphabet(target)
    up = sigma.size.bit_length() + 2
    down = gamma.size.bit_length() + 2
    forward = PartialMap.from_function(
        f"convert({sigma.size}, {gamma.size})",
        sigma,
        gamma,
        lambda x: convert_alphabet(x, gamma),
        TimeBound(up, 1),
    )
    backward = PartialMap.from_function(
        f"convert({gamma.size}, {sigma.size})",
        gamma,
        sigma,
        lambda y: convert_alphabet(y, sigma),
        TimeBound(down, 1),
    )
    return witness(
        forward,
        backward,
        sigma_star(sigma),
        sigma_star(gamma),
        name=f"alphabet_witness({sigma.size}, {gamma.size})",
    )


# Combinators


def compose_witness(e1: Equipollence, e2: Equipollence) -> Equipollence:
    """A ≈ C from A ≈ B and B ≈ C. Forward runs e1 first, then e2."""
    if e1.b != e2.a:
        raise EndpointMismatchError(
            f"Cannot compose {e1.name} (ends at {e1.b.name}) "
            f"with {e2.name} (starts at {e2.a.name})"
        )
    return witness(
        compose_maps(e1.forward, e2.forward),
        compose_maps(e2.backward, e1.backward),
        e1.a,
        e2.b,
        name=f"compose({e1.name}, {e2.name})",
    )


def _tagged(first: PartialMap, second: PartialMap, name: str) -> PartialMap:
    alphabet = first.source
    bound = first.bound + second.bound

    def evaluate(x: Str) -> tuple[Str | None, int]:
        match x.head:
            case 0:
                branch = first
            case 1:
                branch = second
            case _:
                return None, 1
        result = branch.run(x.drop(1))
        if result.clocked_out:
            return None, overrun(bound, x, result.steps + 1)
        if result.value is None:
            return None, result.steps + 1
        tag = Str.trusted(branch.target, x.symbols[:1])
        return tag + result.value, result.steps + 2

    return PartialMap(
        name=name,
        source=alphabet,
        target=first.target,
        evaluator=evaluate,
        bound=bound,
    )


def oplus_witness(e1: Equipollence, e2: Equipollence) -> Equipollence:
    """A⊕A' ≈ B⊕B', acting tag by tag."""
    if e1.a.alphabet != e2.a.alphabet or e1.b.alphabet != e2.b.alphabet:
        raise AlphabetMismatchError(f"oplus_w over different alphabets: {e1}, {e2}")
    name = f"oplus_w({e1.name}, {e2.name})"
    return witness(
        _tagged(e1.forward, e2.forward, f"forward({name})"),
        _tagged(e1.backward, e2.backward, f"backward({name})"),
        oplus(e1.a, e2.a),
        oplus(e1.b, e2.b),
        name=name,
    )


def _paired(first: PartialMap, second: PartialMap, name: str) -> PartialMap:
    bound = (first.bound + second.bound) * 3 + TimeBound(4, 1)

    def evaluate(z: Str) -> tuple[Str | None, int]:
        u, v = unpair(z)
        left = first.run(u)
        if left.clocked_out:
            return None, overrun(bound, z, left.steps + len(z) + 1)
        if left.value is None:
            return None, left.steps + len(z) + 1
        right = second.run(v)
        steps = left.steps + right.steps + len(z) + 1
        if right.clocked_out:
            return None, overrun(bound, z, steps)
        if right.value is None:
            return None, steps
        out = pair(left.value, right.value)
        return out, steps + len(out)

    return PartialMap(
        name=name,
        source=first.source,
        target=first.target,
        evaluator=evaluate,
        bound=bound,
    )


def times_witness(e1: Equipollence, e2: Equipollence) -> Equipollence:
    """A×A' ≈ B×B', acting on each coordinate of the pair encoding."""
    if e1.a.alphabet != e2.a.alphabet or e1.b.alphabet != e2.b.alphabet:
        raise AlphabetMismatchError(f"times_w over different alphabets: {e1}, {e2}")
    name = f"times_w({e1.name}, {e2.name})"
    return witness(
        _paired(e1.forward, e2.forward, f"forward({name})"),
        _paired(e1.backward, e2.backward, f"backward({name})"),
        times(e1.a, e2.a),
        times(e1.b, e2.b),
        name=name,
    )


# Semiring laws


def _structural(
    name: str, alphabet: Alphabet, fn: Callable[[Str], Str | None]
) -> PartialMap:
    return PartialMap.from_function(name, alphabet, alphabet, fn, PAIRING_BOUND)


def _check_same_alphabet(*langs: Language) -> Alphabet:
    alphabet = langs[0].alphabet
    for lang in langs[1:]:
        if lang.alphabet != alphabet:
            raise AlphabetMismatchError(
                "Languages over different alphabets: "
                + ", ".join(lang.name for lang in langs)
            )
    return alphabet


def oplus_commutator(a: Language, b: Language) -> Equipollence:
    """A⊕B ≈ B⊕A by flipping the tag."""
    alphabet = _check_same_alphabet(a, b)
    flip = flip_head(alphabet)
    return witness(
        flip,
        flip,
        oplus(a, b),
        oplus(b, a),
        name=f"oplus_commutator({a.name}, {b.name})",
    )


def oplus_associator(a: Language, b: Language, c: Language) -> Equipollence:
    """(A⊕B)⊕C ≈ A⊕(B⊕C)."""
    alphabet = _check_same_alphabet(a, b, c)

    def regroup(x: Str) -> Str | None:
        match x.symbols[:2]:
            case (0, 0):
                return x.drop(1)
            case (0, 1):
                return Str.trusted(alphabet, (1, 0)) + x.drop(2)
            case (1, *_):
                return Str.trusted(alphabet, (1, 1)) + x.drop(1)
        return None

    def ungroup(y: Str) -> Str | None:
        match y.symbols[:2]:
            case (0, *_):
                return Str.trusted(alphabet, (0, 0)) + y.drop(1)
            case (1, 0):
                return Str.trusted(alphabet, (0, 1)) + y.drop(2)
            case (1, 1):
                return Str.trusted(alphabet, (1,)) + y.drop(2)
        return None

    name = f"oplus_associator({a.name}, {b.name}, {c.name})"
    return witness(
        _structural(f"regroup({alphabet.size})", alphabet, regroup),
        _structural(f"ungroup({alphabet.size})", alphabet, ungroup),
        oplus(oplus(a, b), c),
        oplus(a, oplus(b, c)),
        name=name,
    )


def oplus_empty_unit(a: Language) -> Equipollence:
    """A⊕∅ ≈ A."""
    zero = Str.trusted(a.alphabet, (0,))
    return witness(
        strip(zero),
        prepend(zero),
        oplus(a, empty(a.alphabet)),
        a,
        name=f"oplus_empty_unit({a.name})",
    )


def times_commutator(a: Language, b: Language) -> Equipollence:
    """A×B ≈ B×A by swapping coordinates."""
    alphabet = _check_same_alphabet(a, b)

    def swap(z: Str) -> Str:
        u, v = unpair(z)
        return pair(v, u)

    swapper = _structural(f"swap({alphabet.size})", alphabet, swap)
    return witness(
        swapper,
        swapper,
        times(a, b),
        times(b, a),
        name=f"times_commutator({a.name}, {b.name})",
    )


def times_unit(a: Language) -> Equipollence:
    """A×{ε} ≈ A."""
    alphabet = a.alphabet
    eps = Str.empty(alphabet)

    def first(z: Str) -> Str | None:
        u, v = unpair(z)
        return u if len(v) == 0 else None

    return witness(
        _structural(f"first({alphabet.size})", alphabet, first),
        _structural(f"with_empty({alphabet.size})", alphabet, lambda u: pair(u, eps)),
        times(a, finite([eps])),
        a,
        name=f"times_unit({a.name})",
    )


def times_associator(a: Language, b: Language, c: Language) -> Equipollence:
    """(A×B)×C ≈ A×(B×C)."""
    alphabet = _check_same_alphabet(a, b, c)

    def regroup(z: Str) -> Str:
        uv, w = unpair(z)
        u, v = unpair(uv)
        return pair(u, pair(v, w))

    def ungroup(z: Str) -> Str:
        u, vw = unpair(z)
        v, w = unpair(vw)
        return pair(pair(u, v), w)

    return witness(
        _structural(f"pair_regroup({alphabet.size})", alphabet, regroup),
        _structural(f"pair_ungroup({alphabet.size})", alphabet, ungroup),
        times(times(a, b), c),
        times(a, times(b, c)),
        name=f"times_associator({a.name}, {b.name}, {c.name})",
    )


def distributor(a: Language, b: Language, c: Language) -> Equipollence:
    """A×(B⊕C) ≈ A×B ⊕ A×C."""
    alphabet = _check_same_alphabet(a, b, c)

    def spread(z: Str) -> Str | None:
        u, t = unpair(z)
        if t.head not in (0, 1):
            return None
        return t.take(1) + pair(u, t.drop(1))

    def gather(y: Str) -> Str | None:
        if y.head not in (0, 1):
            return None
        u, v = unpair(y.drop(1))
        return pair(u, y.take(1) + v)

    return witness(
        _structural(f"spread({alphabet.size})", alphabet, spread),
        _structural(f"gather({alphabet.size})", alphabet, gather),
        times(a, oplus(b, c)),
        oplus(times(a, b), times(a, c)),
        name=f"distributor({a.name}, {b.name}, {c.name})",
    )


def non_poset_pair(size: Alphabet | int) -> EmbeddingPair:
    """
    1Σ* and 1(Σ*⊕D) for the Dedekind set D, each embedded in the other.

    1x ↦ 10x carries A onto the sublanguage 10Σ* of B, and B sits inside A by
    inclusion. Embeddings in both directions are what a preorder provides;
    nothing here produces a witness A ≈ B.
    """
    alphabet = as_alphabet(size)
    one = Str.trusted(alphabet, (1,))
    one_zero = Str.trusted(alphabet, (1, 0))
    sigma = sigma_star(alphabet)
    a = prefix(one)
    b = prefix(one, oplus(sigma, dedekind(alphabet)))
    a_into_b = witness(
        rehead(one, one_zero),
        rehead(one_zero, one),
        a,
        prefix(one_zero),
        name=f"embed({a.name}, {b.name})",
    )
    b_into_a = identity_witness(b)
    return EmbeddingPair(a=a, b=b, a_into_b=a_into_b, b_into_a=b_into_a)
