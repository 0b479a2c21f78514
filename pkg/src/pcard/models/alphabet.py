"""Alphabet model."""

from typing import Any, ClassVar

from pydantic import BaseModel, ConfigDict, field_validator

from ..exceptions import InvalidAlphabetError

DIGITS = "0123456789abcdefghijklmnopqrstuvwxyz"


class Alphabet(BaseModel):
    """
    A finite alphabet whose symbols are the indices 0..size-1.
    Symbols are written with the digits 0-9a-z, so sizes run from 2 to 36.
    """

    model_config = ConfigDict(frozen=True)

    size: int

    MIN_SIZE: ClassVar[int] = 2
    MAX_SIZE: ClassVar[int] = len(DIGITS)

    def __init__(self, size: int | None = None, **data: Any) -> None:
        if size is not None:
            data["size"] = size
        elif "size" not in data:
            raise InvalidAlphabetError("Alphabet size cannot be None")
        super().__init__(**data)

    @field_validator("size", mode="before")
    @classmethod
    def validate_size(cls, v: Any) -> int:
        if isinstance(v, bool) or not isinstance(v, int):
            raise InvalidAlphabetError(
                f"Alphabet size must be an integer, got {type(v).__name__}"
            )
        if not cls.MIN_SIZE <= v <= cls.MAX_SIZE:
            raise InvalidAlphabetError(
                f"Alphabet size must be between {cls.MIN_SIZE} and {cls.MAX_SIZE}, "
                f"got {v}"
            )
        return v

    @property
    def digits(self) -> str:
        return DIGITS[: self.size]

    def symbol(self, index: int) -> str:
        return DIGITS[index]

    def __str__(self) -> str:
        return str(self.size)

    def __repr__(self) -> str:
        return f"Alphabet({self.size})"

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Alphabet):
            return self.size == other.size
        return False

    def __hash__(self) -> int:
        return hash(("Alphabet", self.size))
