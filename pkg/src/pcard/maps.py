"""Gallery of clocked partial maps.

Each map is named by the expression that builds it.
"""

from collections.abc import Callable
from typing import Any

from .exceptions import (
    AlphabetMismatchError,
    GalleryParameterError,
    InvalidAlphabetError,
    InvalidStringError,
    UnknownGalleryError,
)
from .languages import as_alphabet, quote
from .models.alphabet import Alphabet
from .models.chain import Injection
from .models.language import Language
from .models.partial_map import PartialMap, overrun
from .models.polynomial import TimeBound
from .models.string import Str
from .strings import rank, str_add

LINEAR = TimeBound(2, 1)


def identity(size: Alphabet | int, domain: Language | None = None) -> PartialMap:
    alphabet = as_alphabet(size)
    return PartialMap.from_function(
        f"identity({alphabet.size})", alphabet, alphabet, lambda x: x, LINEAR, domain
    )


def prepend(w: Str) -> PartialMap:
    return PartialMap.from_function(
        f"prepend({quote(w)})",
        w.alphabet,
        w.alphabet,
        lambda x: w + x,
        TimeBound(len(w) + 2, 1),
    )


def append(w: Str) -> PartialMap:
    return PartialMap.from_function(
        f"append({quote(w)})",
        w.alphabet,
        w.alphabet,
        lambda x: x + w,
        TimeBound(len(w) + 2, 1),
    )


def strip(w: Str) -> PartialMap:
    """Remove the prefix w; undefined when x does not start with w."""
    return PartialMap.from_function(
        f"strip({quote(w)})",
        w.alphabet,
        w.alphabet,
        lambda x: x.drop(len(w)) if x.startswith(w) else None,
        LINEAR,
    )


def strip_suffix(w: Str) -> PartialMap:
    return PartialMap.from_function(
        f"strip_suffix({quote(w)})",
        w.alphabet,
        w.alphabet,
        lambda x: x.drop_last(len(w)) if x.endswith(w) else None,
        LINEAR,
    )


def successor(size: Alphabet | int) -> PartialMap:
    alphabet = as_alphabet(size)
    return PartialMap.from_function(
        f"successor({alphabet.size})",
        alphabet,
        alphabet,
        lambda x: str_add(x, 1),
        LINEAR,
    )


def predecessor(size: Alphabet | int) -> PartialMap:
    alphabet = as_alphabet(size)
    return PartialMap.from_function(
        f"predecessor({alphabet.size})",
        alphabet,
        alphabet,
        lambda x: str_add(x, -1) if rank(x) > 0 else None,
        LINEAR,
    )


def constant(w: Str) -> PartialMap:
    return PartialMap.from_function(
        f"constant({quote(w)})",
        w.alphabet,
        w.alphabet,
        lambda x: w,
        TimeBound(len(w) + 1, 1),
    )


def flip_at(size: Alphabet | int, position: int) -> PartialMap:
    """Swap symbols 0 and 1 at one position; strings too short pass unchanged."""
    alphabet = as_alphabet(size)

    def flip(x: Str) -> Str:
        if len(x) <= position or x.symbols[position] > 1:
            return x
        symbols = list(x.symbols)
        symbols[position] = 1 - symbols[position]
        return Str.trusted(alphabet, tuple(symbols))

    return PartialMap.from_function(
        f"flip_at({alphabet.size}, {position})", alphabet, alphabet, flip, LINEAR
    )


def flip_head(size: Alphabet | int) -> PartialMap:
    return flip_at(size, 0).renamed(f"flip_head({as_alphabet(size).size})")


def rehead(old: Str, new: Str) -> PartialMap:
    """Replace the prefix old by new; undefined when x does not start with old."""
    if old.alphabet != new.alphabet:
        raise AlphabetMismatchError(f"rehead over different alphabets: {old}, {new}")
    return PartialMap.from_function(
        f"rehead({quote(old)}, {quote(new)})",
        old.alphabet,
        old.alphabet,
        lambda x: new + x.drop(len(old)) if x.startswith(old) else None,
        TimeBound(len(new) + 2, 1),
    )


def empty_map(size: Alphabet | int) -> PartialMap:
    alphabet = as_alphabet(size)
    return PartialMap(
        name=f"empty_map({alphabet.size})",
        source=alphabet,
        target=alphabet,
        evaluator=lambda x: (None, len(x) + 1),
        bound=TimeBound(1, 1),
    )


def compose_maps(f: PartialMap, g: PartialMap, name: str | None = None) -> PartialMap:
    """Run f, then g on its output."""
    if f.target != g.source:
        raise AlphabetMismatchError(f"Cannot feed {f.name} into {g.name}")
    bound = f.bound.then(g.bound)

    def evaluate(x: Str) -> tuple[Str | None, int]:
        first = f.run(x)
        if first.clocked_out:
            return None, overrun(bound, x, first.steps)
        if first.value is None:
            return None, first.steps
        second = g.run(first.value)
        steps = first.steps + second.steps
        if second.clocked_out:
            return None, overrun(bound, x, steps)
        return second.value, steps

    return PartialMap(
        name=name or f"then({f.name}, {g.name})",
        source=f.source,
        target=g.target,
        evaluator=evaluate,
        bound=bound,
        domain=f.domain,
    )


def restrict(f: PartialMap, domain: Language) -> PartialMap:
    """The same map, undefined off `domain`."""

    def evaluate(x: Str) -> tuple[Str | None, int]:
        if x not in domain:
            return None, len(x) + 1
        return f.evaluator(x)

    return f.model_copy(update={"evaluator": evaluate, "domain": domain})


def injection(forward: PartialMap, inverse: PartialMap) -> Injection:
    return Injection(forward=forward, inverse=inverse)


MAP_GALLERY: dict[str, Callable[..., PartialMap]] = {
    "identity": identity,
    "prepend": prepend,
    "append": append,
    "strip": strip,
    "strip_suffix": strip_suffix,
    "successor": successor,
    "predecessor": predecessor,
    "constant": constant,
    "flip_at": flip_at,
    "flip_head": flip_head,
    "rehead": rehead,
    "empty_map": empty_map,
}


def map_gallery(name: str, *params: Any) -> PartialMap:
    try:
        builder = MAP_GALLERY[name]
    except KeyError as e:
        raise UnknownGalleryError(
            f"Unknown map '{name}'. Known: {', '.join(sorted(MAP_GALLERY))}"
        ) from e
    try:
        return builder(*params)
    except (TypeError, ValueError, InvalidAlphabetError, InvalidStringError) as e:
        raise GalleryParameterError(f"Bad parameters for {name}{params}: {e}") from e
