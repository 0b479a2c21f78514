"""Strings over a finite alphabet, ordered length-lexicographically."""

import re
from collections.abc import Iterable
from functools import total_ordering
from typing import Any, ClassVar

from pydantic import BaseModel, ConfigDict, field_validator, model_validator

from ..exceptions import AlphabetMismatchError, InvalidStringError
from .alphabet import Alphabet


@total_ordering
class Str(BaseModel):
    """
    A finite string over a declared alphabet.
    Serialized as `<alphabet-size>:<digits>`, e.g. `2:0110`; the empty string over
    a binary alphabet is `2:`.
    """

    model_config = ConfigDict(frozen=True)

    alphabet: Alphabet
    symbols: tuple[int, ...] = ()

    PATTERN: ClassVar[re.Pattern[str]] = re.compile(r"^(\d+):([0-9a-z]*)$")

    def __init__(
        self,
        alphabet: Alphabet | int | None = None,
        symbols: Iterable[int] | str | None = None,
        **data: Any,
    ) -> None:
        if alphabet is not None:
            data["alphabet"] = alphabet
        if symbols is not None:
            data["symbols"] = symbols
        if "alphabet" not in data:
            raise InvalidStringError("A string needs an alphabet")
        super().__init__(**data)

    @field_validator("alphabet", mode="before")
    @classmethod
    def validate_alphabet(cls, v: Any) -> Alphabet:
        if isinstance(v, Alphabet):
            return v
        return Alphabet(v)

    @field_validator("symbols", mode="before")
    @classmethod
    def validate_symbols(cls, v: Any) -> tuple[int, ...]:
        if isinstance(v, str):
            try:
                return tuple(int(ch, 36) for ch in v)
            except ValueError as e:
                raise InvalidStringError(f"Invalid digit in '{v}'") from e
        try:
            return tuple(int(s) for s in v)
        except (TypeError, ValueError) as e:
            raise InvalidStringError(f"Invalid symbol sequence: {v!r}") from e

    @model_validator(mode="after")
    def check_symbols_in_alphabet(self) -> "Str":
        for s in self.symbols:
            if not 0 <= s < self.alphabet.size:
                raise InvalidStringError(
                    f"Symbol {s} is outside alphabet of size {self.alphabet.size}"
                )
        return self

    @classmethod
    def trusted(cls, alphabet: Alphabet, symbols: tuple[int, ...]) -> "Str":
        """Build without validation. Callers guarantee every symbol is in range."""
        return cls.model_construct(alphabet=alphabet, symbols=symbols)

    @classmethod
    def parse(cls, text: str) -> "Str":
        """Parse the `<size>:<digits>` form."""
        match = cls.PATTERN.match(text.strip())
        if not match:
            raise InvalidStringError(
                f"Invalid string literal: '{text}'. "
                "Expected <size>:<digits>, e.g. 2:0110"
            )
        return cls(int(match.group(1)), match.group(2))

    @classmethod
    def of(cls, alphabet: Alphabet | int, digits: str = "") -> "Str":
        return cls(alphabet, digits)

    @classmethod
    def empty(cls, alphabet: Alphabet | int) -> "Str":
        if not isinstance(alphabet, Alphabet):
            alphabet = Alphabet(alphabet)
        return cls.trusted(alphabet, ())

    @property
    def digits(self) -> str:
        return "".join(self.alphabet.symbol(s) for s in self.symbols)

    @property
    def head(self) -> int | None:
        return self.symbols[0] if self.symbols else None

    @property
    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        return (len(self.symbols), self.symbols)

    def startswith(self, prefix: "Str") -> bool:
        self._check_alphabet(prefix)
        return self.symbols[: len(prefix.symbols)] == prefix.symbols

    def endswith(self, suffix: "Str") -> bool:
        self._check_alphabet(suffix)
        n = len(suffix.symbols)
        return n == 0 or self.symbols[-n:] == suffix.symbols

    def drop(self, n: int) -> "Str":
        """The string without its first n symbols."""
        return Str.trusted(self.alphabet, self.symbols[n:])

    def drop_last(self, n: int) -> "Str":
        return Str.trusted(self.alphabet, self.symbols[: len(self.symbols) - n])

    def take(self, n: int) -> "Str":
        return Str.trusted(self.alphabet, self.symbols[:n])

    def _check_alphabet(self, other: "Str") -> None:
        if self.alphabet != other.alphabet:
            raise AlphabetMismatchError(
                f"Alphabet mismatch: {self.alphabet.size} vs {other.alphabet.size}"
            )

    def __add__(self, other: "Str") -> "Str":
        if not isinstance(other, Str):
            return NotImplemented
        self._check_alphabet(other)
        return Str.trusted(self.alphabet, self.symbols + other.symbols)

    def __len__(self) -> int:
        return len(self.symbols)

    # ε is a value, not an absence
    def __bool__(self) -> bool:
        return True

    def __str__(self) -> str:
        return f"{self.alphabet.size}:{self.digits}"

    def __repr__(self) -> str:
        return f"Str('{self}')"

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Str):
            return self.alphabet == other.alphabet and self.symbols == other.symbols
        if isinstance(other, str):
            try:
                return self == Str.parse(other)
            except InvalidStringError:
                return False
        return False

    def __lt__(self, other: object) -> bool:
        if not isinstance(other, Str):
            return NotImplemented
        self._check_alphabet(other)
        return self.sort_key < other.sort_key

    def __hash__(self) -> int:
        return hash((self.alphabet.size, self.symbols))
