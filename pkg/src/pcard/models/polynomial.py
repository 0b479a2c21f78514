"""Polynomials with non-negative integer coefficients and clock bounds."""

from typing import Any

from pydantic import BaseModel, ConfigDict, field_validator

from ..exceptions import PreconditionError


class Polynomial(BaseModel):
    """
    A polynomial with non-negative integer coefficients, constant term first.
    `Polynomial([0, 1, 1])` is n + n².
    """

    model_config = ConfigDict(frozen=True)

    coefficients: tuple[int, ...]

    def __init__(self, coefficients: Any = None, **data: Any) -> None:
        if coefficients is not None:
            data["coefficients"] = coefficients
        super().__init__(**data)

    @field_validator("coefficients", mode="before")
    @classmethod
    def validate_coefficients(cls, v: Any) -> tuple[int, ...]:
        coefficients = tuple(int(c) for c in v)
        if not coefficients:
            raise PreconditionError("A polynomial needs at least one coefficient")
        if any(c < 0 for c in coefficients):
            raise PreconditionError(
                f"Polynomial coefficients must be non-negative: {list(coefficients)}"
            )
        while len(coefficients) > 1 and coefficients[-1] == 0:
            coefficients = coefficients[:-1]
        return coefficients

    @classmethod
    def linear(cls, slope: int = 1, offset: int = 0) -> "Polynomial":
        return cls((offset, slope))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1 if any(self.coefficients) else 0

    def __call__(self, n: int) -> int:
        value = 0
        for c in reversed(self.coefficients):
            value = value * n + c
        return value

    def least_preimage(self, m: int) -> int:
        """Least n >= 0 with p(n) >= m."""
        if self(0) >= m:
            return 0
        if self.degree == 0:
            raise PreconditionError(f"Constant polynomial never reaches {m}")
        high = 1
        while self(high) < m:
            high *= 2
        low = high // 2
        while low < high:
            mid = (low + high) // 2
            if self(mid) >= m:
                high = mid
            else:
                low = mid + 1
        return low

    def greatest_preimage(self, m: int) -> int | None:
        """Greatest n >= 0 with p(n) <= m, or None if p(0) > m."""
        if self(0) > m:
            return None
        if self.degree == 0:
            raise PreconditionError("Constant polynomial has unbounded preimages")
        return self.least_preimage(m + 1) - 1

    def __str__(self) -> str:
        terms = []
        for i, c in enumerate(self.coefficients):
            if c == 0 and len(self.coefficients) > 1:
                continue
            if i == 0:
                terms.append(str(c))
            elif i == 1:
                terms.append(f"{c}n" if c != 1 else "n")
            else:
                terms.append(f"{c}n^{i}" if c != 1 else f"n^{i}")
        return " + ".join(reversed(terms))

    def __repr__(self) -> str:
        return f"Polynomial({list(self.coefficients)})"


class TimeBound(BaseModel):
    """Clock bound t(n) = c·n^e + c."""

    model_config = ConfigDict(frozen=True)

    c: int
    e: int = 1

    def __init__(self, c: int | None = None, e: int | None = None, **data: Any) -> None:
        if c is not None:
            data["c"] = c
        if e is not None:
            data["e"] = e
        super().__init__(**data)

    @field_validator("c")
    @classmethod
    def validate_c(cls, v: int) -> int:
        if v < 1:
            raise PreconditionError(f"Time bound coefficient must be >= 1, got {v}")
        return v

    @field_validator("e")
    @classmethod
    def validate_e(cls, v: int) -> int:
        if v < 0:
            raise PreconditionError(f"Time bound exponent must be >= 0, got {v}")
        return v

    def __call__(self, n: int) -> int:
        return self.c * n**self.e + self.c

    def then(self, other: "TimeBound") -> "TimeBound":
        """Bound for running self and then other on an output of length <= self(n)."""
        k = 1 + 2 * self.c
        e1 = max(self.e, 1)
        return TimeBound(
            c=2 * self.c + other.c * k**other.e + other.c,
            e=max(self.e, e1 * other.e, 1),
        )

    def hops(self) -> "TimeBound":
        """Bound for n + 2 successive runs, each within self(n)."""
        return TimeBound(c=4 * self.c, e=self.e + 1)

    def to_polynomial(self) -> Polynomial:
        if self.e == 0:
            return Polynomial([2 * self.c])
        coefficients = [0] * (self.e + 1)
        coefficients[0] = self.c
        coefficients[self.e] = self.c
        return Polynomial(coefficients)

    def __add__(self, other: "TimeBound") -> "TimeBound":
        if not isinstance(other, TimeBound):
            return NotImplemented
        return TimeBound(c=2 * (self.c + other.c), e=max(self.e, other.e))

    def __mul__(self, k: int) -> "TimeBound":
        return TimeBound(c=self.c * k, e=self.e)

    def __str__(self) -> str:
        return f"{self.c}n^{self.e} + {self.c}"

    def __repr__(self) -> str:
        return f"TimeBound(c={self.c}, e={self.e})"
