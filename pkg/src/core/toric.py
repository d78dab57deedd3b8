"""Toric presentations phi: K[Y] -> K[X], relation families and fiber graphs.

A monomial in K[Y] is a sorted tuple of variable indices (a multiset), so
``(0, 3)`` is y1*y4 and ``(1, 1)`` is y2^2. The toric ideal is never stored:
two monomials are equal modulo the ideal exactly when they have the same
phi-image, and a set of binomials generates it exactly when every fiber graph
is connected.
"""

import itertools
import logging
from collections import Counter, defaultdict
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass
from enum import Enum

import networkx as nx
from networkx.utils import UnionFind

from src.core.bases import MonomialBasis, ProductStructure
from src.core.monomials import Monomial, add_exponents, shift
from src.utils.errors import (
    FiberTooLargeError,
    InternalInconsistencyError,
    PreconditionViolationError,
)

logger = logging.getLogger(__name__)

YMonomial = tuple[int, ...]

DEFAULT_D_MAX = 3
DEFAULT_FIBER_CAP = 1_000_000
DEFAULT_SINGLE_COLUMN_DEGREE = 3


# ---------------------------------------------------------------------------
# Domain types
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class YVariable:
    """A presentation variable and its image.

    For products, ``index_vector`` holds the 1-based positions (a_1, ..., a_s) of
    the chosen factor elements and ``factors`` the elements themselves.
    """

    index: int
    label: str
    image: Monomial
    index_vector: tuple[int, ...] | None = None
    factors: tuple[Monomial, ...] | None = None


@dataclass(frozen=True, order=True)
class Binomial:
    """lhs - rhs with lhs < rhs; ordered by degree, then lhs, then rhs."""

    degree: int
    lhs: YMonomial
    rhs: YMonomial

    @classmethod
    def of(cls, a: Iterable[int], b: Iterable[int]) -> "Binomial":
        a = tuple(sorted(a))
        b = tuple(sorted(b))
        if a == b:
            raise ValueError(f"Zero binomial: both sides are {a}.")
        if len(a) != len(b):
            raise ValueError(f"Sides of different degree: {a} and {b}.")
        lhs, rhs = (a, b) if a < b else (b, a)
        return cls(len(a), lhs, rhs)

    def sides(self) -> tuple[YMonomial, YMonomial]:
        return self.lhs, self.rhs


class MoveKind(str, Enum):
    PROPER = "proper"
    GENERALIZED = "generalized"
    LINEAR = "linear"
    SINGLE_COLUMN = "single-column"
    HIBI = "hibi"
    CUSTOM = "custom"


@dataclass(frozen=True)
class MoveSet:
    kind: MoveKind
    moves: tuple[Binomial, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "moves", tuple(sorted(set(self.moves))))

    def __len__(self) -> int:
        return len(self.moves)

    def __iter__(self) -> Iterator[Binomial]:
        return iter(self.moves)

    def __contains__(self, binomial: Binomial) -> bool:
        return binomial in set(self.moves)


class Presentation:
    """The variables of K[Y] together with their images in K[X]."""

    def __init__(
        self,
        variables: Sequence[YVariable],
        n: int,
        factor_sequences: tuple[tuple[Monomial, ...], ...] | None = None,
    ):
        self.variables = tuple(variables)
        self.n = n
        self.factor_sequences = factor_sequences
        self.images = [v.image.exponents for v in self.variables]
        self._by_label = {v.label: v.index for v in self.variables}
        self._by_image: dict[tuple[int, ...], list[int]] = defaultdict(list)
        for v in self.variables:
            self._by_image[v.image.exponents].append(v.index)
        self._by_vector = {
            v.index_vector: v.index for v in self.variables if v.index_vector is not None
        }

    @classmethod
    def from_basis(cls, basis: MonomialBasis) -> "Presentation":
        variables = [
            YVariable(index=k, label=f"y{k + 1}", image=m)
            for k, m in enumerate(basis.elements)
        ]
        return cls(variables, basis.n)

    @classmethod
    def from_factor_sequences(
        cls, sequences: Sequence[Sequence[Monomial]], n: int
    ) -> "Presentation":
        """One variable per choice (f_1, ..., f_s), enumerated in lex order of positions."""
        sequences = tuple(tuple(seq) for seq in sequences)
        compact = all(len(seq) <= 9 for seq in sequences)
        variables = []
        positions = [range(1, len(seq) + 1) for seq in sequences]
        for k, vector in enumerate(itertools.product(*positions)):
            factors = tuple(seq[a - 1] for seq, a in zip(sequences, vector))
            image = Monomial.one(n)
            for f in factors:
                image = image.multiply(f)
            if compact:
                label = "y" + "".join(str(a) for a in vector)
            else:
                label = "y[" + ",".join(str(a) for a in vector) + "]"
            variables.append(YVariable(k, label, image, vector, factors))
        return cls(variables, n, factor_sequences=sequences)

    @property
    def is_product(self) -> bool:
        return self.factor_sequences is not None

    @property
    def s(self) -> int:
        return len(self.factor_sequences) if self.factor_sequences else 1

    def __len__(self) -> int:
        return len(self.variables)

    def label(self, index: int) -> str:
        return self.variables[index].label

    def image(self, mono: YMonomial) -> tuple[int, ...]:
        total = (0,) * self.n
        for v in mono:
            total = add_exponents(total, self.images[v])
        return total

    def variables_with_image(self, image: tuple[int, ...] | None) -> list[int]:
        if image is None:
            return []
        return self._by_image.get(image, [])

    def index_of_vector(self, vector: tuple[int, ...]) -> int:
        return self._by_vector[tuple(vector)]

    def rows(self, mono: YMonomial) -> list[tuple[int, ...]]:
        """The matrix of a product monomial: one index vector per factor of the monomial."""
        return [self.variables[v].index_vector for v in mono]

    def monomial(self, *labels: str) -> YMonomial:
        """Build a monomial from labels, e.g. ``monomial("y1", "y4")`` or ``monomial("y2^2")``."""
        indices = []
        for text in labels:
            for token in text.split("*"):
                token = token.strip()
                name, _, exponent = token.partition("^")
                if name not in self._by_label:
                    raise KeyError(f"Unknown variable '{name}'.")
                indices.extend([self._by_label[name]] * (int(exponent) if exponent else 1))
        return tuple(sorted(indices))

    def binomial(self, a: Iterable[int], b: Iterable[int]) -> Binomial:
        """A sign-normalized binomial, checked to lie in the toric ideal."""
        a = tuple(sorted(a))
        b = tuple(sorted(b))
        if self.image(a) != self.image(b):
            raise InternalInconsistencyError(
                f"{a} and {b} have different images", operation="binomial"
            )
        return Binomial.of(a, b)


def build_presentation(source: MonomialBasis | ProductStructure) -> Presentation:
    if isinstance(source, ProductStructure):
        return Presentation.from_factor_sequences(
            [factor.elements for factor in source.factors], source.n
        )
    return Presentation.from_basis(source)


# ---------------------------------------------------------------------------
# Relation families
# ---------------------------------------------------------------------------

def linear_relations(presentation: Presentation) -> MoveSet:
    """Degree-one binomials y_v - y_w between variables with the same image."""
    moves = []
    for indices in presentation._by_image.values():
        for a, b in itertools.combinations(indices, 2):
            moves.append(Binomial.of((a,), (b,)))
    return MoveSet(MoveKind.LINEAR, tuple(moves))


def exchange_relations(presentation: Presentation, generalized: bool = False) -> MoveSet:
    """Symmetric exchange relations y_r y_s - y_t y_u.

    phi(y_t) = (x_j/x_i) phi(y_r) and phi(y_u) = (x_i/x_j) phi(y_s). The proper
    relations also require deg_i phi(y_r) > deg_i phi(y_s) and
    deg_j phi(y_r) < deg_j phi(y_s); the generalized ones drop both conditions.
    """
    images = presentation.images
    n = presentation.n
    found: set[Binomial] = set()
    for r, f in enumerate(images):
        for s, g in enumerate(images):
            if not generalized and r == s:
                continue
            for i in range(n):
                if f[i] == 0 or (not generalized and f[i] <= g[i]):
                    continue
                for j in range(n):
                    if j == i or g[j] == 0 or (not generalized and f[j] >= g[j]):
                        continue
                    ts = presentation.variables_with_image(shift(f, i, j))
                    us = presentation.variables_with_image(shift(g, j, i))
                    for t in ts:
                        for u in us:
                            left = tuple(sorted((r, s)))
                            right = tuple(sorted((t, u)))
                            if left != right:
                                found.add(presentation.binomial(left, right))
    kind = MoveKind.GENERALIZED if generalized else MoveKind.PROPER
    logger.debug(f"{len(found)} {kind.value} exchange relations")
    return MoveSet(kind, tuple(found))


def _differ_in_one_column(
    a: YMonomial, b: YMonomial, rows: Sequence[tuple[int, ...]], s: int
) -> bool:
    for column in range(s):
        left = Counter(rows[v][:column] + rows[v][column + 1:] for v in a)
        right = Counter(rows[v][:column] + rows[v][column + 1:] for v in b)
        if left == right:
            return True
    return False


def single_column_moves(
    presentation: Presentation,
    max_degree: int = DEFAULT_SINGLE_COLUMN_DEGREE,
    fiber_cap: int = DEFAULT_FIBER_CAP,
) -> MoveSet:
    """Binomials F - G whose matrices agree, up to row order, outside one column."""
    if not presentation.is_product:
        raise PreconditionViolationError(
            "Single-column moves need a presentation built from a product structure.",
            operation="single_column_moves",
        )
    rows = [v.index_vector for v in presentation.variables]
    found = []
    for e in range(2, max_degree + 1):
        for fiber_elements in graded_fibers(presentation, e, fiber_cap).values():
            for a, b in itertools.combinations(fiber_elements, 2):
                if _differ_in_one_column(a, b, rows, presentation.s):
                    found.append(Binomial.of(a, b))
    return MoveSet(MoveKind.SINGLE_COLUMN, tuple(found))


# ---------------------------------------------------------------------------
# Fibers
# ---------------------------------------------------------------------------

def fiber(
    presentation: Presentation,
    target: Monomial | tuple[int, ...],
    e: int,
    fiber_cap: int = DEFAULT_FIBER_CAP,
) -> list[YMonomial]:
    """All degree-e monomials with image ``target``, by backtracking with divisibility pruning."""
    if e < 1:
        raise PreconditionViolationError(f"Fiber degree must be positive, got {e}.", "fiber")
    goal = target.exponents if isinstance(target, Monomial) else tuple(target)
    images = presentation.images
    count = len(images)
    found: list[YMonomial] = []
    chosen: list[int] = []

    def extend(start: int, remaining: tuple[int, ...]) -> None:
        if len(chosen) == e:
            if not any(remaining):
                found.append(tuple(chosen))
                if len(found) > fiber_cap:
                    raise FiberTooLargeError(goal, fiber_cap, e)
            return
        for v in range(start, count):
            image = images[v]
            if all(a <= r for a, r in zip(image, remaining)):
                chosen.append(v)
                extend(v, tuple(r - a for a, r in zip(image, remaining)))
                chosen.pop()

    extend(0, goal)
    return found


def graded_fibers(
    presentation: Presentation, e: int, fiber_cap: int = DEFAULT_FIBER_CAP
) -> dict[tuple[int, ...], list[YMonomial]]:
    """Every degree-e monomial of K[Y], grouped by image."""
    groups: dict[tuple[int, ...], list[YMonomial]] = defaultdict(list)
    for mono in itertools.combinations_with_replacement(range(len(presentation)), e):
        target = presentation.image(mono)
        bucket = groups[target]
        bucket.append(mono)
        if len(bucket) > fiber_cap:
            raise FiberTooLargeError(target, fiber_cap, e)
    return dict(groups)


def _remove(mono: YMonomial, part: YMonomial) -> YMonomial:
    counts = Counter(mono)
    counts.subtract(part)
    return tuple(sorted(counts.elements()))


class MoveIndex:
    """Moves keyed by each of their sides, for applying them inside larger monomials."""

    def __init__(self, moves: Iterable[Binomial] = ()):
        self._table: dict[YMonomial, set[YMonomial]] = defaultdict(set)
        self._sizes: set[int] = set()
        for move in moves:
            self.add(move)

    def add(self, move: Binomial) -> None:
        self._table[move.lhs].add(move.rhs)
        self._table[move.rhs].add(move.lhs)
        self._sizes.add(move.degree)

    def neighbours(self, mono: YMonomial) -> set[YMonomial]:
        out = set()
        for size in self._sizes:
            if size > len(mono):
                continue
            for part in set(itertools.combinations(mono, size)):
                others = self._table.get(part)
                if not others:
                    continue
                rest = _remove(mono, part)
                for other in others:
                    out.add(tuple(sorted(rest + other)))
        out.discard(mono)
        return out


@dataclass(frozen=True)
class FiberComponents:
    connected: bool
    components: tuple[tuple[YMonomial, ...], ...]


def _components(fiber_elements: Sequence[YMonomial], index: MoveIndex) -> FiberComponents:
    graph = nx.Graph()
    graph.add_nodes_from(fiber_elements)
    members = set(fiber_elements)
    for mono in fiber_elements:
        for other in index.neighbours(mono):
            if other in members:
                graph.add_edge(mono, other)
    components = sorted(tuple(sorted(c)) for c in nx.connected_components(graph))
    return FiberComponents(connected=len(components) <= 1, components=tuple(components))


def fiber_connected(
    fiber_elements: Iterable[YMonomial], moves: Iterable[Binomial] | MoveIndex
) -> FiberComponents:
    """Connectivity of the fiber graph: F ~ G when a move turns a sub-multiset of F into G."""
    index = moves if isinstance(moves, MoveIndex) else MoveIndex(moves)
    return _components(sorted(set(fiber_elements)), index)


def same_component(
    presentation: Presentation,
    moves: Iterable[Binomial],
    a: YMonomial,
    b: YMonomial,
    include_linear: bool = True,
    fiber_cap: int = DEFAULT_FIBER_CAP,
) -> bool:
    a = tuple(sorted(a))
    b = tuple(sorted(b))
    if len(a) != len(b) or presentation.image(a) != presentation.image(b):
        return False
    all_moves = list(moves)
    if include_linear:
        all_moves.extend(linear_relations(presentation))
    members = fiber(presentation, presentation.image(a), len(a), fiber_cap)
    result = fiber_connected(members, all_moves)
    return any(a in comp and b in comp for comp in result.components)


def permute_column(
    presentation: Presentation, mono: YMonomial, column: int, order: Sequence[int]
) -> YMonomial:
    """Permute the entries of one column of a product monomial's matrix.

    ``order[k]`` names the row whose column entry moves into row k.
    """
    rows = [list(r) for r in presentation.rows(mono)]
    entries = [rows[k][column] for k in range(len(rows))]
    for k, source in enumerate(order):
        rows[k][column] = entries[source]
    return tuple(sorted(presentation.index_of_vector(tuple(r)) for r in rows))


# ---------------------------------------------------------------------------
# White's conjecture checker
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DegreeStatistics:
    degree: int
    monomials: int
    fibers: int
    nontrivial_fibers: int
    largest_fiber: int
    disconnected_fibers: int


@dataclass(frozen=True)
class FiberFailure:
    degree: int
    target: Monomial
    components: tuple[tuple[YMonomial, ...], ...]


@dataclass(frozen=True)
class WhiteReport:
    passed: bool
    d_max: int
    move_count: int
    linear_count: int
    per_degree: tuple[DegreeStatistics, ...]
    first_failure: FiberFailure | None


def white_check(
    presentation: Presentation,
    moves: Iterable[Binomial],
    d_max: int = DEFAULT_D_MAX,
    fiber_cap: int = DEFAULT_FIBER_CAP,
) -> WhiteReport:
    """Check that moves together with the linear relations connect every fiber up to d_max."""
    if d_max < 2:
        raise PreconditionViolationError(f"d_max must be at least 2, got {d_max}.", "white_check")
    moves = list(moves)
    linear = linear_relations(presentation)
    index = MoveIndex(itertools.chain(moves, linear))
    statistics = []
    first_failure = None
    for e in range(1, d_max + 1):
        groups = graded_fibers(presentation, e, fiber_cap)
        nontrivial = disconnected = largest = 0
        for target in sorted(groups):
            members = groups[target]
            largest = max(largest, len(members))
            if len(members) < 2:
                continue
            nontrivial += 1
            result = _components(members, index)
            if not result.connected:
                disconnected += 1
                if first_failure is None:
                    first_failure = FiberFailure(e, Monomial(target), result.components)
        statistics.append(
            DegreeStatistics(
                degree=e,
                monomials=sum(len(v) for v in groups.values()),
                fibers=len(groups),
                nontrivial_fibers=nontrivial,
                largest_fiber=largest,
                disconnected_fibers=disconnected,
            )
        )
        logger.debug(f"degree {e}: {len(groups)} fibers, {disconnected} disconnected")
    return WhiteReport(
        passed=first_failure is None,
        d_max=d_max,
        move_count=len(set(moves)),
        linear_count=len(linear),
        per_degree=tuple(statistics),
        first_failure=first_failure,
    )


# ---------------------------------------------------------------------------
# Minimal generators
# ---------------------------------------------------------------------------

def _connecting_binomials(result: FiberComponents) -> list[Binomial]:
    """Join components with the canonically smallest binomials, Kruskal style."""
    uf = UnionFind()
    for component in result.components:
        uf.union(*component)
    elements = sorted(m for component in result.components for m in component)
    needed = len(result.components) - 1
    added: list[Binomial] = []
    for a, b in itertools.combinations(elements, 2):
        if len(added) == needed:
            break
        if uf[a] != uf[b]:
            added.append(Binomial.of(a, b))
            uf.union(a, b)
    return added


def sweep_minimal_generators(
    batches: Iterable[Iterable[Sequence[YMonomial]]],
) -> list[list[Binomial]]:
    """Degree-by-degree Markov sweep, returning the new generators of each batch.

    Each batch holds the fibers of one degree, batches in increasing degree.
    Within a fiber the generators found so far define the components; one new
    binomial per missing edge joins them.
    """
    index = MoveIndex()
    generators: list[list[Binomial]] = []
    for fibers in batches:
        found: list[Binomial] = []
        for members in fibers:
            if len(members) < 2:
                continue
            result = _components(members, index)
            if not result.connected:
                found.extend(_connecting_binomials(result))
        for move in found:
            index.add(move)
        generators.append(sorted(found))
    return generators


def minimal_generators(
    presentation: Presentation,
    d_max: int = DEFAULT_D_MAX,
    fiber_cap: int = DEFAULT_FIBER_CAP,
) -> list[Binomial]:
    """A minimal generating set of the toric ideal up to degree d_max."""
    if d_max < 1:
        raise PreconditionViolationError(f"d_max must be positive, got {d_max}.", "minimal_generators")

    def batches():
        for e in range(1, d_max + 1):
            groups = graded_fibers(presentation, e, fiber_cap)
            yield [groups[target] for target in sorted(groups)]

    generators = [g for batch in sweep_minimal_generators(batches()) for g in batch]
    logger.info(f"{len(generators)} minimal generators up to degree {d_max}")
    return generators
