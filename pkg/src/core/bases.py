"""Polymatroidal bases: exchange predicates, Veronese types, products and powers.

Every predicate returns ``(verdict, witness)``; the witness is None on success
and names a concrete failing configuration otherwise.
"""

import itertools
import logging
from collections.abc import Iterable, Iterator
from dataclasses import dataclass

from src.core.monomials import Monomial, add_exponents, shift
from src.utils.errors import (
    EmptyBasisError,
    InternalInconsistencyError,
    LengthMismatchError,
    PreconditionViolationError,
)

logger = logging.getLogger(__name__)


# ---------------------------------------------------------------------------
# Domain types
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MonomialBasis:
    """A nonempty set of monomials of one degree.

    Elements are sorted from the lex-largest down (x1 > x2 > ... > xn), which is
    the numbering y_1, y_2, ... used for presentation variables.
    """

    n: int
    d: int
    elements: tuple[Monomial, ...]

    @classmethod
    def of(cls, monomials: Iterable[Monomial]) -> "MonomialBasis":
        unique = set(monomials)
        if not unique:
            raise EmptyBasisError()
        lengths = {m.n for m in unique}
        if len(lengths) != 1:
            left, right = sorted(lengths)[:2]
            raise LengthMismatchError(left, right, operation="basis")
        degrees = {m.degree() for m in unique}
        if len(degrees) != 1:
            raise PreconditionViolationError(
                f"All monomials of a basis must have the same degree, got {sorted(degrees)}.",
                operation="basis",
            )
        return cls(n=lengths.pop(), d=degrees.pop(), elements=tuple(sorted(unique, reverse=True)))

    @classmethod
    def from_exponents(cls, rows: Iterable[Iterable[int]]) -> "MonomialBasis":
        return cls.of(Monomial(tuple(row)) for row in rows)

    def __post_init__(self):
        object.__setattr__(self, "_members", frozenset(m.exponents for m in self.elements))

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[Monomial]:
        return iter(self.elements)

    def __contains__(self, m: Monomial) -> bool:
        return m.exponents in self._members

    def contains_exponents(self, exponents: tuple[int, ...]) -> bool:
        return exponents in self._members

    def index(self, m: Monomial) -> int:
        return self.elements.index(m)

    @property
    def exponent_rows(self) -> list[tuple[int, ...]]:
        return [m.exponents for m in self.elements]


@dataclass(frozen=True)
class Profile:
    """Entrywise minimum and maximum exponents over a basis."""

    lower: tuple[int, ...]
    upper: tuple[int, ...]


@dataclass(frozen=True)
class ProductStructure:
    """The product B_1...B_s together with the factors it came from."""

    factors: tuple[MonomialBasis, ...]
    flattened: MonomialBasis

    @property
    def s(self) -> int:
        return len(self.factors)

    @property
    def n(self) -> int:
        return self.flattened.n


@dataclass(frozen=True)
class FailureWitness:
    """Monomials f, g and variable indices i, j at which an exchange axiom fails."""

    f: Monomial
    g: Monomial
    i: int
    j: int | None = None

    def as_dict(self) -> dict:
        out = {"f": str(self.f), "g": str(self.g), "i": f"x{self.i + 1}"}
        if self.j is not None:
            out["j"] = f"x{self.j + 1}"
        return out


# ---------------------------------------------------------------------------
# Predicates
# ---------------------------------------------------------------------------

def is_polymatroidal(basis: MonomialBasis) -> tuple[bool, FailureWitness | None]:
    """Check the one-sided exchange axiom over all pairs."""
    n = basis.n
    rows = basis.exponent_rows
    for f in rows:
        for g in rows:
            for i in range(n):
                if f[i] <= g[i]:
                    continue
                if not any(
                    f[j] < g[j] and basis.contains_exponents(shift(f, i, j))
                    for j in range(n)
                ):
                    return False, FailureWitness(Monomial(f), Monomial(g), i)
    return True, None


def verify_symmetric_exchange(basis: MonomialBasis) -> tuple[bool, FailureWitness | None]:
    """Check the two-sided exchange: (x_j/x_i)f and (x_i/x_j)g both in B."""
    n = basis.n
    rows = basis.exponent_rows
    for f in rows:
        for g in rows:
            for i in range(n):
                if f[i] <= g[i]:
                    continue
                found = False
                for j in range(n):
                    if f[j] >= g[j]:
                        continue
                    if basis.contains_exponents(shift(f, i, j)) and basis.contains_exponents(
                        shift(g, j, i)
                    ):
                        found = True
                        break
                if not found:
                    return False, FailureWitness(Monomial(f), Monomial(g), i)
    return True, None


def profile(basis: MonomialBasis) -> Profile:
    rows = basis.exponent_rows
    return Profile(
        lower=tuple(min(column) for column in zip(*rows)),
        upper=tuple(max(column) for column in zip(*rows)),
    )


def _bounded_compositions(
    total: int, lower: tuple[int, ...], upper: tuple[int, ...]
) -> Iterator[tuple[int, ...]]:
    """Yield all integer vectors lower <= a <= upper with sum(a) == total."""
    if not lower:
        if total == 0:
            yield ()
        return
    rest_low = sum(lower[1:])
    rest_high = sum(upper[1:])
    start = max(lower[0], total - rest_high)
    stop = min(upper[0], total - rest_low)
    for value in range(stop, start - 1, -1):
        for tail in _bounded_compositions(total - value, lower[1:], upper[1:]):
            yield (value,) + tail


def veronese_type(
    n: int, d: int, lower: Iterable[int], upper: Iterable[int]
) -> MonomialBasis:
    """All degree-d monomials whose exponents lie between lower and upper."""
    lower = tuple(lower)
    upper = tuple(upper)
    if len(lower) != n:
        raise LengthMismatchError(n, len(lower), operation="veronese_type")
    if len(upper) != n:
        raise LengthMismatchError(n, len(upper), operation="veronese_type")
    if any(lo < 0 or lo > hi for lo, hi in zip(lower, upper)):
        raise EmptyBasisError(f"Bounds are not ordered: lower={lower}, upper={upper}.")
    if not sum(lower) <= d <= sum(upper):
        raise EmptyBasisError(
            f"No degree-{d} monomial fits between {lower} and {upper}."
        )
    return MonomialBasis.of(Monomial(a) for a in _bounded_compositions(d, lower, upper))


def _sep_by_definition(basis: MonomialBasis) -> tuple[bool, FailureWitness | None]:
    n = basis.n
    rows = basis.exponent_rows
    for f in rows:
        for g in rows:
            for i in range(n):
                if f[i] <= g[i]:
                    continue
                for j in range(n):
                    if f[j] < g[j] and not basis.contains_exponents(shift(f, i, j)):
                        return False, FailureWitness(Monomial(f), Monomial(g), i, j)
    return True, None


def is_veronese_type(basis: MonomialBasis) -> bool:
    p = profile(basis)
    return veronese_type(basis.n, basis.d, p.lower, p.upper) == basis


def has_sep(basis: MonomialBasis) -> tuple[bool, FailureWitness | None]:
    """Strong exchange property, cross-checked against the Veronese criterion."""
    verdict, witness = _sep_by_definition(basis)
    if verdict != is_veronese_type(basis):
        raise InternalInconsistencyError(
            f"definition check says SEP={verdict} but the Veronese comparison disagrees",
            operation="has_sep",
        )
    return verdict, witness


def shortcut_property(basis: MonomialBasis) -> bool:
    """For f, g with (x_i/x_j)f, (x_k/x_l)g in B find m with
    (x_i/x_m)f, (x_l/x_m)f, (x_m/x_l)g in B."""
    if not has_sep(basis)[0]:
        raise PreconditionViolationError(
            "shortcut_property requires a basis with the strong exchange property.",
            operation="shortcut_property",
        )
    n = basis.n
    rows = basis.exponent_rows
    contains = basis.contains_exponents

    def moves(h: tuple[int, ...]) -> list[tuple[int, int]]:
        # (a, b) with (x_a / x_b) h in B and a != b
        return [(a, b) for a in range(n) for b in range(n) if a != b and contains(shift(h, b, a))]

    move_table = {h: moves(h) for h in rows}
    for f in rows:
        for i, _j in move_table[f]:
            for g in rows:
                for _k, ell in move_table[g]:
                    if not any(
                        contains(shift(f, m, i))
                        and contains(shift(f, m, ell))
                        and contains(shift(g, ell, m))
                        for m in range(n)
                    ):
                        logger.debug(f"shortcut fails at f={f}, g={g}, i={i}, l={ell}")
                        return False
    return True


# ---------------------------------------------------------------------------
# Products and powers
# ---------------------------------------------------------------------------

def product_of(*bases: MonomialBasis) -> ProductStructure:
    """The s-fold product B_1...B_s with its factors recorded."""
    if not bases:
        raise EmptyBasisError("A product needs at least one factor.")
    n = bases[0].n
    for b in bases[1:]:
        if b.n != n:
            raise LengthMismatchError(n, b.n, operation="product")
    level = {m.exponents for m in bases[0]}
    for b in bases[1:]:
        rows = b.exponent_rows
        level = {add_exponents(a, r) for a in level for r in rows}
    return ProductStructure(
        factors=tuple(bases),
        flattened=MonomialBasis.of(Monomial(a) for a in level),
    )


def product(first: MonomialBasis, second: MonomialBasis) -> ProductStructure:
    return product_of(first, second)


def power(basis: MonomialBasis, k: int) -> ProductStructure:
    """The k-fold product of a basis with itself."""
    if k < 1:
        raise PreconditionViolationError(f"Power must be positive, got {k}.", operation="power")
    structure = product_of(*([basis] * k))
    if has_sep(basis)[0]:
        p = profile(basis)
        predicted = veronese_type(
            basis.n, k * basis.d, [k * a for a in p.lower], [k * a for a in p.upper]
        )
        if predicted != structure.flattened:
            raise InternalInconsistencyError(
                f"B^{k} differs from the Veronese type with the scaled profile",
                operation="power",
            )
    return structure


def factor_power_element(basis: MonomialBasis, m: Monomial, k: int) -> tuple[Monomial, ...]:
    """Write m as a product of k elements of a SEP basis B.

    m must lie in the Veronese type with profile k * profile(B). Each exponent is
    split as a = k * b + r with 0 <= r < k; the remainders are dealt round-robin
    into k squarefree monomials of equal degree, one added to each copy of b.
    """
    if not has_sep(basis)[0]:
        raise PreconditionViolationError(
            "factor_power_element requires a basis with the strong exchange property.",
            operation="factor_power_element",
        )
    if m.degree() != k * basis.d:
        raise PreconditionViolationError(
            f"{m} has degree {m.degree()}, expected {k * basis.d}.",
            operation="factor_power_element",
        )
    quotient = [a // k for a in m.exponents]
    dealt = [list(quotient) for _ in range(k)]
    position = 0
    for var, a in enumerate(m.exponents):
        for _ in range(a % k):
            dealt[position % k][var] += 1
            position += 1
    factors = tuple(sorted((Monomial(tuple(row)) for row in dealt), reverse=True))
    for factor in factors:
        if factor not in basis:
            raise PreconditionViolationError(
                f"{m} is not in the Veronese type of B^{k}: factor {factor} leaves B.",
                operation="factor_power_element",
            )
    return factors


def lattice_point_count(n: int, d: int, lower: Iterable[int], upper: Iterable[int]) -> int:
    """Brute-force count of bounded compositions, independent of veronese_type."""
    lower = tuple(lower)
    upper = tuple(upper)
    ranges = [range(lo, hi + 1) for lo, hi in zip(lower, upper)]
    return sum(1 for point in itertools.product(*ranges) if sum(point) == d)
