"""Language gallery, census and enumeration.

Every gallery language is named by the expression that builds it, so a name can
be pasted back into the command-line expression language.
"""

import logging
import os
from collections.abc import Callable, Iterable
from typing import Any

from .exceptions import (
    AlphabetMismatchError,
    CensusInfeasibleError,
    GalleryParameterError,
    InvalidAlphabetError,
    InvalidStringError,
    PreconditionError,
    UnknownGalleryError,
)
from .models.alphabet import Alphabet
from .models.language import CensusForm, CensusTable, Language, RankForm
from .models.string import Str
from .strings import (
    rank,
    strings_between,
    strings_upto,
    total_upto,
    unpair,
    value_of,
)

logger = logging.getLogger(__name__)

DEFAULT_CENSUS_GUARD = 26


def census_guard() -> int:
    """Exponent g such that brute force may visit at most 2^g strings."""
    if guard := os.getenv("PCARD_CENSUS_GUARD"):
        return int(guard)
    return DEFAULT_CENSUS_GUARD


def ensure_enumerable(alphabet: Alphabet, n: int) -> None:
    if alphabet.size ** (n + 1) > 2 ** census_guard():
        raise CensusInfeasibleError(
            f"census infeasible: enumerating Σ^<={n} over {alphabet.size} symbols "
            f"exceeds 2^{census_guard()} strings"
        )


def quote(x: Str) -> str:
    return f'"{x}"'


def as_alphabet(size: Alphabet | int) -> Alphabet:
    return size if isinstance(size, Alphabet) else Alphabet(size)


def _at(form: Callable[[int], int], n: int) -> int:
    return form(n) if n >= 0 else 0


def tow(n: int) -> int:
    """tow(0) = 1, tow(n+1) = 2^tow(n)."""
    t = 1
    for _ in range(n):
        t = 2**t
    return t


def tower_band(length: int) -> int | None:
    """The j with tow(j) <= length < tow(j+1); None for length 0."""
    if length < 1:
        return None
    j, t = 0, 1
    while length.bit_length() > t:
        t = 2**t
        j += 1
    return j


def is_dedekind_length(length: int) -> bool:
    """True iff length = 2^(2^(2^k)) for some k, i.e. tow(j) with j >= 2."""
    t = 4
    while t < length:
        t = 2**t
    return t == length


# Gallery


def sigma_star(size: Alphabet | int) -> Language:
    alphabet = as_alphabet(size)
    k = alphabet.size
    return Language(
        name=f"sigma_star({k})",
        alphabet=alphabet,
        evaluator=lambda x: (True, len(x) + 1),
        census_closed_form=lambda n: total_upto(k, n),
        rank_closed_form=lambda x: rank(x) + 1,
    )


def empty(size: Alphabet | int) -> Language:
    alphabet = as_alphabet(size)
    return Language(
        name=f"empty({alphabet.size})",
        alphabet=alphabet,
        evaluator=lambda x: (False, 1),
        census_closed_form=lambda n: 0,
        rank_closed_form=lambda x: 0,
    )


def finite(
    members: Iterable[Str | str], size: Alphabet | int | None = None
) -> Language:
    strs = sorted({m if isinstance(m, Str) else Str.parse(m) for m in members})
    if strs:
        alphabet = strs[0].alphabet
        if size is not None and as_alphabet(size) != alphabet:
            raise AlphabetMismatchError("finite(): members disagree with declared size")
        name = "finite([" + ", ".join(quote(s) for s in strs) + "])"
    elif size is None:
        raise GalleryParameterError("finite([]) needs an explicit alphabet size")
    else:
        alphabet = as_alphabet(size)
        name = f"finite([], {alphabet.size})"
    lookup = frozenset(strs)
    return Language(
        name=name,
        alphabet=alphabet,
        evaluator=lambda x: (x in lookup, len(x) + 1),
        census_closed_form=lambda n: sum(1 for s in strs if len(s) <= n),
        rank_closed_form=lambda x: sum(1 for s in strs if s <= x),
    )


def complement(lang: Language) -> Language:
    k = lang.alphabet.size

    def evaluate(x: Str) -> tuple[bool, int]:
        member, steps = lang.evaluator(x)
        return not member, steps + 1

    census_form: CensusForm | None = None
    rank_form: RankForm | None = None
    c, r = lang.census_closed_form, lang.rank_closed_form
    if c is not None and r is not None:

        def complement_census(n: int) -> int:
            return total_upto(k, n) - c(n)

        def complement_rank(x: Str) -> int:
            return rank(x) + 1 - r(x)

        census_form, rank_form = complement_census, complement_rank
    return Language(
        name=f"complement({lang.name})",
        alphabet=lang.alphabet,
        evaluator=evaluate,
        census_closed_form=census_form,
        rank_closed_form=rank_form,
        fuel_limit=lang.fuel_limit,
    )


def oplus(a: Language, b: Language) -> Language:
    """Tagged disjoint union {0x : x ∈ A} ∪ {1y : y ∈ B}."""
    if a.alphabet != b.alphabet:
        raise AlphabetMismatchError(f"oplus over different alphabets: {a} and {b}")

    def evaluate(x: Str) -> tuple[bool, int]:
        match x.head:
            case 0:
                member, steps = a.evaluator(x.drop(1))
            case 1:
                member, steps = b.evaluator(x.drop(1))
            case _:
                return False, 1
        return member, steps + 1

    census_form: CensusForm | None = None
    rank_form: RankForm | None = None
    ca, ra = a.census_closed_form, a.rank_closed_form
    cb, rb = b.census_closed_form, b.rank_closed_form
    if ca and ra and cb and rb:

        def oplus_census(n: int) -> int:
            return 0 if n == 0 else ca(n - 1) + cb(n - 1)

        def oplus_rank(x: Str) -> int:
            if not x.symbols:
                return 0
            tag, u = x.symbols[0], x.drop(1)
            m = len(u)
            base = _at(ca, m - 1) + _at(cb, m - 1)
            a_band = ca(m) - _at(ca, m - 1)
            if tag == 0:
                return base + ra(u) - _at(ca, m - 1)
            if tag == 1:
                return base + a_band + rb(u) - _at(cb, m - 1)
            return base + a_band + cb(m) - _at(cb, m - 1)

        census_form, rank_form = oplus_census, oplus_rank

    return Language(
        name=f"oplus({a.name}, {b.name})",
        alphabet=a.alphabet,
        evaluator=evaluate,
        census_closed_form=census_form,
        rank_closed_form=rank_form,
        fuel_limit=max(a.fuel_limit, b.fuel_limit),
    )


def times(a: Language, b: Language) -> Language:
    """Pair-encoded product {pair(x, y) : x ∈ A, y ∈ B}."""
    if a.alphabet != b.alphabet:
        raise AlphabetMismatchError(f"times over different alphabets: {a} and {b}")

    def evaluate(x: Str) -> tuple[bool, int]:
        u, v = unpair(x)
        in_a, steps_a = a.evaluator(u)
        if not in_a:
            return False, steps_a + len(x) + 1
        in_b, steps_b = b.evaluator(v)
        return in_b, steps_a + steps_b + len(x) + 1

    return Language(
        name=f"times({a.name}, {b.name})",
        alphabet=a.alphabet,
        evaluator=evaluate,
        fuel_limit=max(a.fuel_limit, b.fuel_limit),
    )


def prefix(w: Str, lang: Language | None = None) -> Language:
    """The language w·L (w·Σ* when no L is given)."""
    if lang is None:
        inner = sigma_star(w.alphabet)
        name = f"prefix({quote(w)})"
    else:
        if lang.alphabet != w.alphabet:
            raise AlphabetMismatchError(f"prefix {w} does not match {lang}")
        inner = lang
        name = f"prefix({quote(w)}, {lang.name})"
    lw = len(w)

    def evaluate(x: Str) -> tuple[bool, int]:
        if not x.startswith(w):
            return False, min(len(x), lw) + 1
        member, steps = inner.evaluator(x.drop(lw))
        return member, steps + lw

    census_form: CensusForm | None = None
    rank_form: RankForm | None = None
    c, r = inner.census_closed_form, inner.rank_closed_form
    if c is not None and r is not None:

        def prefix_census(n: int) -> int:
            return _at(c, n - lw)

        def prefix_rank(x: Str) -> int:
            if len(x) < lw:
                return 0
            m = len(x) - lw
            base = _at(c, m - 1)
            head = x.symbols[:lw]
            if head < w.symbols:
                return base
            if head > w.symbols:
                return c(m)
            return base + r(x.drop(lw)) - _at(c, m - 1)

        census_form, rank_form = prefix_census, prefix_rank

    return Language(
        name=name,
        alphabet=w.alphabet,
        evaluator=evaluate,
        census_closed_form=census_form,
        rank_closed_form=rank_form,
        fuel_limit=inner.fuel_limit,
    )


def shift_set(size: Alphabet | int, n: int) -> Language:
    """Σ* minus its first n strings in length-lex order."""
    alphabet = as_alphabet(size)
    k = alphabet.size
    if n < 0:
        raise GalleryParameterError(f"shift_set needs n >= 0, got {n}")
    return Language(
        name=f"shift_set({k}, {n})",
        alphabet=alphabet,
        evaluator=lambda x: (rank(x) >= n, len(x) + 1),
        census_closed_form=lambda m: max(0, total_upto(k, m) - n),
        rank_closed_form=lambda x: max(0, rank(x) + 1 - n),
    )


def _band_census(k: int, parity: int, n: int) -> int:
    total, j = 0, 0
    while (low := tow(j)) <= n:
        if j % 2 == parity:
            high = min(2**low - 1, n)
            total += (k ** (high + 1) - k**low) // (k - 1)
        j += 1
    return total


def _tower_gap(size: Alphabet | int, parity: int) -> Language:
    alphabet = as_alphabet(size)
    k = alphabet.size

    def in_band(length: int) -> bool:
        band = tower_band(length)
        return band is not None and band % 2 == parity

    def rank_form(x: Str) -> int:
        below = _band_census(k, parity, len(x) - 1) if len(x) else 0
        if not in_band(len(x)):
            return below
        return below + value_of(x) + 1

    return Language(
        name=f"tower_gap_A{parity}({k})",
        alphabet=alphabet,
        evaluator=lambda x: (in_band(len(x)), len(x) + 1),
        census_closed_form=lambda n: _band_census(k, parity, n),
        rank_closed_form=rank_form,
    )


def tower_gap_a0(size: Alphabet | int) -> Language:
    """Strings whose length lies in [tow(2k), tow(2k+1)) for some k."""
    return _tower_gap(size, 0)


def tower_gap_a1(size: Alphabet | int) -> Language:
    """Strings whose length lies in [tow(2k+1), tow(2k+2)) for some k."""
    return _tower_gap(size, 1)


def dedekind(size: Alphabet | int) -> Language:
    """The tally set {1^(2^(2^(2^k))) : k >= 0}: lengths 4, 16, 65536, ..."""
    alphabet = as_alphabet(size)

    def evaluate(x: Str) -> tuple[bool, int]:
        for i, s in enumerate(x.symbols):
            if s != 1:
                return False, i + 1
        return is_dedekind_length(len(x)), len(x) + 1

    def census_form(n: int) -> int:
        count, t = 0, 4
        while t <= n:
            count += 1
            t = 2**t
        return count

    def rank_form(x: Str) -> int:
        below = census_form(len(x) - 1) if len(x) else 0
        if is_dedekind_length(len(x)) and x.symbols >= (1,) * len(x):
            return below + 1
        return below

    return Language(
        name=f"dedekind({alphabet.size})",
        alphabet=alphabet,
        evaluator=evaluate,
        census_closed_form=census_form,
        rank_closed_form=rank_form,
    )


def suffix_graph(size: Alphabet | int) -> Language:
    """Pairs (x, x·b) for a single symbol b."""
    alphabet = as_alphabet(size)

    def evaluate(x: Str) -> tuple[bool, int]:
        u, v = unpair(x)
        return len(v) == len(u) + 1 and v.symbols[:-1] == u.symbols, len(x) + 1

    return Language(
        name=f"suffix_graph({alphabet.size})",
        alphabet=alphabet,
        evaluator=evaluate,
    )


GALLERY: dict[str, Callable[..., Language]] = {
    "sigma_star": sigma_star,
    "empty": empty,
    "finite": finite,
    "complement": complement,
    "oplus": oplus,
    "times": times,
    "prefix": prefix,
    "shift_set": shift_set,
    "tower_gap_A0": tower_gap_a0,
    "tower_gap_A1": tower_gap_a1,
    "dedekind": dedekind,
    "suffix_graph": suffix_graph,
}


def gallery(name: str, *params: Any) -> Language:
    """Build a named gallery language."""
    try:
        builder = GALLERY[name]
    except KeyError as e:
        raise UnknownGalleryError(
            f"Unknown gallery language '{name}'. Known: {', '.join(sorted(GALLERY))}"
        ) from e
    try:
        return builder(*params)
    except (TypeError, ValueError, InvalidAlphabetError, InvalidStringError) as e:
        raise GalleryParameterError(f"Bad parameters for {name}{params}: {e}") from e


# Census and enumeration


def census(lang: Language, n: int) -> int:
    """Number of members of length at most n."""
    if lang.census_closed_form is not None:
        return lang.census_closed_form(n)
    ensure_enumerable(lang.alphabet, n)
    logger.debug(f"Brute-force census of {lang.name} up to length {n}")
    return sum(1 for x in strings_upto(lang.alphabet, n) if x in lang)


def enumerate_upto(lang: Language, n: int) -> list[Str]:
    """All members of length at most n, in length-lex order."""
    ensure_enumerable(lang.alphabet, n)
    return [x for x in strings_upto(lang.alphabet, n) if x in lang]


def members_between(lang: Language, low: int, high: int) -> list[Str]:
    ensure_enumerable(lang.alphabet, high)
    return [x for x in strings_between(lang.alphabet, low, high) if x in lang]


def census_table(lang: Language, n: int) -> CensusTable:
    return CensusTable(
        language=lang.name, entries=[(i, census(lang, i)) for i in range(n + 1)]
    )


def dedekind_gap_check(kmax: int) -> bool:
    """Check that each tower length ℓ is followed by ℓ^(log₂ ℓ), up to index kmax."""
    if kmax > 2:
        raise PreconditionError(
            f"kmax={kmax} reaches tower lengths beyond 65536; "
            "only kmax <= 2 is supported"
        )
    lengths = [tow(j + 2) for j in range(kmax + 1)]
    return all(
        nxt == cur ** (cur.bit_length() - 1)
        for cur, nxt in zip(lengths, lengths[1:], strict=False)
    )
