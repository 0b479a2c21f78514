"""Checkable witnesses for polynomial-time cardinality and choice.

Strings over finite alphabets are numbered in length-lex order; languages and
partial maps carry step-counting evaluators so every claimed witness can be
run under its declared clock and checked exhaustively up to a length.

Main exports:
- Str, Alphabet: strings and alphabets with the length-lex correspondence
- Language, PartialMap: clocked membership tests and maps
- Equipollence: a claimed witness, checked by verify_equipollence
- cb_witness: the Cantor-Bernstein construction from two injections
- run_construction: the stage construction of a language between A and B
- PCardError: root of the exception hierarchy
"""

from importlib.metadata import version

from .cantor_bernstein import cb_witness
from .diag import run_construction
from .exceptions import PCardError
from .models import Alphabet, Equipollence, Language, PartialMap, Str
from .witnesses import verify_equipollence

__version__ = version("pcard-toolkit")
__all__ = [
    "Alphabet",
    "Str",
    "Language",
    "PartialMap",
    "Equipollence",
    "verify_equipollence",
    "cb_witness",
    "run_construction",
    "PCardError",
]
