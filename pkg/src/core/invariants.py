"""Hilbert functions, Krull dimension, h-vectors and Rees-ideal generator bidegrees."""

import itertools
import logging
from collections import defaultdict
from collections.abc import Sequence
from dataclasses import dataclass

from sympy import Matrix, binomial

from src.core.bases import MonomialBasis, ProductStructure
from src.core.monomials import Monomial, add_exponents
from src.core.toric import (
    DEFAULT_FIBER_CAP,
    Binomial,
    Presentation,
    YVariable,
    build_presentation,
    sweep_minimal_generators,
)
from src.utils.errors import (
    FiberTooLargeError,
    InternalInconsistencyError,
    NotStabilizedError,
    PreconditionViolationError,
)

logger = logging.getLogger(__name__)

DEFAULT_REES_CAP_X = 2
DEFAULT_REES_CAP_Y = 3

# Trailing zero coefficients required before an h-vector counts as terminated.
# Fixed at 2 rather than growing with dim: with D = dim + 1 the five-cycle
# (dim 5, h of length 5) is already settled by HF(0..6), and a window of dim
# would force D >= 2 * dim.
STABILIZATION_WINDOW = 2


@dataclass(frozen=True)
class HilbertData:
    values: tuple[int, ...]
    dim: int
    h_vector: tuple[int, ...]
    stabilized: bool

    @property
    def max_degree(self) -> int:
        return len(self.values) - 1


def hilbert_function(basis: MonomialBasis, max_degree: int) -> list[int]:
    """HF(e) = number of distinct monomials in B^e, for e = 0..max_degree."""
    if max_degree < 0:
        raise PreconditionViolationError(
            f"max_degree must be non-negative, got {max_degree}.", operation="hilbert_function"
        )
    rows = basis.exponent_rows
    level = {(0,) * basis.n}
    values = [1]
    for e in range(1, max_degree + 1):
        level = {add_exponents(a, r) for a in level for r in rows}
        values.append(len(level))
        logger.debug(f"HF({e}) = {len(level)}")
    return values


def krull_dim(basis: MonomialBasis) -> int:
    """Rank of the exponent matrix over the rationals."""
    return int(Matrix(basis.exponent_rows).rank())


def h_vector(
    values: Sequence[int], dim: int, allow_unstable: bool = False
) -> tuple[tuple[int, ...], bool]:
    """Numerator of the Hilbert series over (1 - t)^dim.

    Returns the coefficients with trailing zeros trimmed and whether the last
    STABILIZATION_WINDOW computed coefficients vanished.
    """
    if dim < 1:
        raise PreconditionViolationError(f"Dimension must be positive, got {dim}.", "h_vector")
    top = len(values) - 1
    raw = [
        sum((-1) ** j * int(binomial(dim, j)) * values[k - j] for j in range(min(k, dim) + 1))
        for k in range(top + 1)
    ]
    stabilized = len(raw) > STABILIZATION_WINDOW and not any(raw[-STABILIZATION_WINDOW:])
    if not stabilized and not allow_unstable:
        raise NotStabilizedError(top)
    while len(raw) > 1 and raw[-1] == 0:
        raw.pop()
    h = tuple(raw)
    if stabilized:
        for e, value in enumerate(values):
            rebuilt = sum(
                h_k * int(binomial(e - k + dim - 1, dim - 1))
                for k, h_k in enumerate(h)
                if k <= e
            )
            if rebuilt != value:
                raise InternalInconsistencyError(
                    f"h-vector {h} does not reproduce HF({e}) = {value}", operation="h_vector"
                )
    return h, stabilized


def is_palindromic(h: Sequence[int]) -> bool:
    return tuple(h) == tuple(reversed(h))


def hilbert_data(
    basis: MonomialBasis, max_degree: int | None = None, allow_unstable: bool = False
) -> HilbertData:
    dim = krull_dim(basis)
    top = dim + 1 if max_degree is None else max_degree
    values = hilbert_function(basis, top)
    if dim == 0:
        # only the basis {1}: the toric ring is the field itself
        return HilbertData(tuple(values), 0, (1,), True)
    h, stabilized = h_vector(values, dim, allow_unstable=allow_unstable)
    return HilbertData(tuple(values), dim, h, stabilized)


# ---------------------------------------------------------------------------
# Segre products
# ---------------------------------------------------------------------------

def segre_hilbert_function(structure: ProductStructure, max_degree: int) -> list[int]:
    """Hilbert function of the Segre product of the factor rings K[B_1], ..., K[B_s]."""
    per_factor = [hilbert_function(f, max_degree) for f in structure.factors]
    values = []
    for e in range(max_degree + 1):
        value = 1
        for hf in per_factor:
            value *= hf[e]
        values.append(value)
    return values


def segre_dimension(structure: ProductStructure) -> int:
    return sum(krull_dim(f) for f in structure.factors) - (structure.s - 1)


def segre_data(
    structure: ProductStructure, max_degree: int | None = None, allow_unstable: bool = False
) -> HilbertData:
    dim = segre_dimension(structure)
    top = dim + 1 if max_degree is None else max_degree
    values = segre_hilbert_function(structure, top)
    h, stabilized = h_vector(values, dim, allow_unstable=allow_unstable)
    return HilbertData(tuple(values), dim, h, stabilized)


# ---------------------------------------------------------------------------
# Rees algebra
# ---------------------------------------------------------------------------

@dataclass(frozen=True, order=True)
class Bidegree:
    x_degree: int
    y_degree: int

    def __post_init__(self):
        if self.x_degree < 0 or self.y_degree < 0 or (self.x_degree == 0 and self.y_degree == 0):
            raise ValueError(f"Invalid bidegree ({self.x_degree}, {self.y_degree}).")

    def as_tuple(self) -> tuple[int, int]:
        return self.x_degree, self.y_degree


@dataclass(frozen=True)
class ReesReport:
    presentation: Presentation
    generators: tuple[Binomial, ...]
    bidegrees: tuple[Bidegree, ...]
    cap_x: int
    cap_y: int

    @property
    def degree_one_count(self) -> int:
        """Generators of bidegree (0, 1): linear relations between coincident images."""
        return sum(1 for b in self.bidegrees if b.as_tuple() == (0, 1))

    def within(self, allowed: set[tuple[int, int]]) -> bool:
        return all(b.as_tuple() in allowed for b in self.bidegrees)

    def toric_part(self) -> list[Binomial]:
        """The bidegree-(0, *) generators, renumbered as toric-ideal binomials."""
        n = self.presentation.n - 1
        return [
            Binomial.of([v - n for v in g.lhs], [v - n for v in g.rhs])
            for g, b in zip(self.generators, self.bidegrees)
            if b.x_degree == 0
        ]


def rees_presentation(source: MonomialBasis | ProductStructure) -> Presentation:
    """x_i -> x_i and y_j -> f_j t, with t kept as an extra last coordinate."""
    toric = build_presentation(source)
    n = toric.n
    variables = [
        YVariable(index=i, label=f"x{i + 1}", image=Monomial(Monomial.variable(n, i).exponents + (0,)))
        for i in range(n)
    ]
    for v in toric.variables:
        variables.append(
            YVariable(
                index=n + v.index,
                label=v.label,
                image=Monomial(v.image.exponents + (1,)),
                index_vector=v.index_vector,
                factors=v.factors,
            )
        )
    return Presentation(variables, n + 1)


def _bidegree_fibers(
    presentation: Presentation, a: int, b: int, fiber_cap: int
) -> list[list[tuple[int, ...]]]:
    n = presentation.n - 1
    xs = range(n)
    ys = range(n, len(presentation))
    groups: dict[tuple[int, ...], list[tuple[int, ...]]] = defaultdict(list)
    for x_part, y_part in itertools.product(
        itertools.combinations_with_replacement(xs, a),
        itertools.combinations_with_replacement(ys, b),
    ):
        mono = x_part + y_part
        target = presentation.image(mono)
        bucket = groups[target]
        bucket.append(mono)
        if len(bucket) > fiber_cap:
            raise FiberTooLargeError(target, fiber_cap)
    return [groups[target] for target in sorted(groups)]


def rees_bidegrees(
    source: MonomialBasis | ProductStructure,
    cap_x: int = DEFAULT_REES_CAP_X,
    cap_y: int = DEFAULT_REES_CAP_Y,
    fiber_cap: int = DEFAULT_FIBER_CAP,
) -> ReesReport:
    """Bidegrees of minimal generators of the Rees ideal, swept by total degree then bidegree."""
    if cap_x < 1 or cap_y < 1:
        raise PreconditionViolationError(
            f"Rees caps must be positive, got ({cap_x}, {cap_y}).", operation="rees_bidegrees"
        )
    presentation = rees_presentation(source)
    order = sorted(
        ((a, b) for a in range(cap_x + 1) for b in range(cap_y + 1) if a + b > 0),
        key=lambda ab: (ab[0] + ab[1], ab[0]),
    )
    generators: list[Binomial] = []
    bidegrees: list[Bidegree] = []

    def batches():
        for a, b in order:
            yield _bidegree_fibers(presentation, a, b, fiber_cap)

    # one batch per bidegree; each batch's generators carry that bidegree
    for (a, b), found in zip(order, sweep_minimal_generators(batches())):
        generators.extend(found)
        bidegrees.extend([Bidegree(a, b)] * len(found))
    logger.info(f"Rees ideal: {len(generators)} generators within caps ({cap_x}, {cap_y})")
    return ReesReport(presentation, tuple(generators), tuple(bidegrees), cap_x, cap_y)
