"""Exact monomial arithmetic on exponent vectors.

A monomial x_1^a_1 ... x_n^a_n is stored as the tuple (a_1, ..., a_n).
Variables are numbered from 0 in code and printed from 1 (x1, x2, ...).
Python integers never overflow, so powers of large bases stay exact.
"""

from dataclasses import dataclass

from src.utils.errors import LengthMismatchError, ZeroExponentError


@dataclass(frozen=True, order=True, slots=True)
class Monomial:
    """An exponent vector; ordered lexicographically on the exponents."""

    exponents: tuple[int, ...]

    def __post_init__(self):
        if any(not isinstance(a, int) or a < 0 for a in self.exponents):
            raise ValueError(f"Exponents must be non-negative integers: {self.exponents}")

    @classmethod
    def of(cls, *exponents: int) -> "Monomial":
        return cls(tuple(exponents))

    @classmethod
    def one(cls, n: int) -> "Monomial":
        return cls((0,) * n)

    @classmethod
    def variable(cls, n: int, i: int) -> "Monomial":
        return cls(tuple(1 if k == i else 0 for k in range(n)))

    @classmethod
    def parse(cls, text: str) -> "Monomial":
        """Parse the text form: space-separated exponents, e.g. ``"1 1 1 0"``."""
        return cls(tuple(int(token) for token in text.split()))

    @property
    def n(self) -> int:
        return len(self.exponents)

    def __len__(self) -> int:
        return len(self.exponents)

    def __getitem__(self, i: int) -> int:
        return self.exponents[i]

    def __str__(self) -> str:
        from src.utils.formatters import format_monomial
        return format_monomial(self)

    def degree(self) -> int:
        return sum(self.exponents)

    def multiply(self, other: "Monomial") -> "Monomial":
        if len(self.exponents) != len(other.exponents):
            raise LengthMismatchError(len(self.exponents), len(other.exponents))
        return Monomial(tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    __mul__ = multiply

    def divides(self, other: "Monomial") -> bool:
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def exchange(self, i: int, j: int) -> "Monomial":
        """Return (x_j / x_i) * self."""
        if i == j:
            return self
        if self.exponents[i] == 0:
            raise ZeroExponentError(i)
        exps = list(self.exponents)
        exps[i] -= 1
        exps[j] += 1
        return Monomial(tuple(exps))

    def to_text(self) -> str:
        return " ".join(str(a) for a in self.exponents)


def degree(m: Monomial) -> int:
    return m.degree()


def multiply(a: Monomial, b: Monomial) -> Monomial:
    return a.multiply(b)


def exchange(m: Monomial, i: int, j: int) -> Monomial:
    return m.exchange(i, j)


def shift(exponents: tuple[int, ...], i: int, j: int) -> tuple[int, ...] | None:
    """Raw-tuple exchange used in hot loops; None when x_i does not divide."""
    if i == j:
        return exponents
    if exponents[i] == 0:
        return None
    exps = list(exponents)
    exps[i] -= 1
    exps[j] += 1
    return tuple(exps)


def add_exponents(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(x + y for x, y in zip(a, b))
