"""The correspondence between strings and natural numbers.

Strings are numbered in length-lexicographic order starting from 0 at the empty
string. Over a binary alphabet: ε=0, "0"=1, "1"=2, "00"=3, ...
"""

import itertools
import math
from collections.abc import Iterator

from .exceptions import AlphabetMismatchError, UnderflowError
from .models.alphabet import Alphabet
from .models.string import Str


def band_start(size: int, length: int) -> int:
    """Number of strings strictly shorter than `length`."""
    return (size**length - 1) // (size - 1)


def total_upto(size: int, n: int) -> int:
    """Number of strings of length at most n."""
    if n < 0:
        return 0
    return band_start(size, n + 1)


def value_of(x: Str) -> int:
    """Read x as a base-|Σ| numeral; ε reads as 0."""
    size = x.alphabet.size
    value = 0
    for s in x.symbols:
        value = value * size + s
    return value


def rank(x: Str) -> int:
    return band_start(x.alphabet.size, len(x)) + value_of(x)


def unrank(n: int, alphabet: Alphabet | int) -> Str:
    if not isinstance(alphabet, Alphabet):
        alphabet = Alphabet(alphabet)
    if n < 0:
        raise UnderflowError(f"No string has negative rank {n}")
    size = alphabet.size
    length, offset, power = 0, 0, 1
    while offset + power <= n:
        offset += power
        power *= size
        length += 1
    value = n - offset
    symbols = [0] * length
    for i in range(length - 1, -1, -1):
        value, symbols[i] = divmod(value, size)
    return Str.trusted(alphabet, tuple(symbols))


def cantor_pair(a: int, b: int) -> int:
    return (a + b) * (a + b + 1) // 2 + b


def cantor_unpair(z: int) -> tuple[int, int]:
    w = (math.isqrt(8 * z + 1) - 1) // 2
    b = z - w * (w + 1) // 2
    return w - b, b


def pair(x: Str, y: Str) -> Str:
    if x.alphabet != y.alphabet:
        raise AlphabetMismatchError(
            "Cannot pair strings over alphabets "
            f"{x.alphabet.size} and {y.alphabet.size}"
        )
    return unrank(cantor_pair(rank(x), rank(y)), x.alphabet)


def unpair(z: Str) -> tuple[Str, Str]:
    a, b = cantor_unpair(rank(z))
    return unrank(a, z.alphabet), unrank(b, z.alphabet)


def convert_alphabet(x: Str, target: Alphabet | int) -> Str:
    """Re-express x over another alphabet, keeping its rank."""
    return unrank(rank(x), target)


def str_add(x: Str, n: int) -> Str:
    r = rank(x) + n
    if r < 0:
        raise UnderflowError(f"{x} {n:+d} underflows below ε")
    return unrank(r, x.alphabet)


def strings_of_length(alphabet: Alphabet | int, length: int) -> Iterator[Str]:
    if not isinstance(alphabet, Alphabet):
        alphabet = Alphabet(alphabet)
    for symbols in itertools.product(range(alphabet.size), repeat=length):
        yield Str.trusted(alphabet, symbols)


def strings_upto(alphabet: Alphabet | int, n: int) -> Iterator[Str]:
    """All strings of length at most n, in length-lex order."""
    for length in range(n + 1):
        yield from strings_of_length(alphabet, length)


def strings_between(alphabet: Alphabet | int, low: int, high: int) -> Iterator[Str]:
    """All strings with low <= length <= high, in length-lex order."""
    for length in range(max(low, 0), high + 1):
        yield from strings_of_length(alphabet, length)
