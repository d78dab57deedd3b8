"""Buchberger's algorithm for pure-difference binomials.

Elements are kept as (lead, tail) pairs of dense exponent vectors over the
presentation variables. An S-pair of u - v and u' - v' is again a difference
of two monomials, and so is every reduction step, so no coefficient ever
appears.
"""

import itertools
import logging
from collections import deque
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from enum import Enum

from src.core.toric import (
    DEFAULT_D_MAX,
    DEFAULT_FIBER_CAP,
    Binomial,
    Presentation,
    YMonomial,
    graded_fibers,
)
from src.utils.errors import (
    GroebnerTimeoutError,
    InternalInconsistencyError,
    PreconditionViolationError,
)

logger = logging.getLogger(__name__)

DEFAULT_STEP_CAP = 1_000_000
DEFAULT_ORDER_SEARCH_LIMIT = 24

Dense = tuple[int, ...]


# ---------------------------------------------------------------------------
# Monomial orders
# ---------------------------------------------------------------------------

class OrderKind(str, Enum):
    LEX = "lex"
    DEGLEX = "deglex"
    DEGREVLEX = "degrevlex"


@dataclass(frozen=True)
class MonomialOrder:
    """A monomial order on K[Y]; ``ranking`` lists variable indices from largest to smallest."""

    kind: OrderKind
    ranking: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.ranking) != list(range(len(self.ranking))):
            raise PreconditionViolationError(
                f"Variable ranking must be a permutation of 0..{len(self.ranking) - 1}.",
                operation="monomial_order",
            )
        object.__setattr__(self, "kind", OrderKind(self.kind))

    @classmethod
    def standard(cls, kind: OrderKind | str, count: int) -> "MonomialOrder":
        """y1 > y2 > ... > y_count."""
        return cls(OrderKind(kind), tuple(range(count)))

    @property
    def size(self) -> int:
        return len(self.ranking)

    def key(self, exponents: Dense) -> tuple:
        """Sort key: a > b in this order iff key(a) > key(b)."""
        if self.kind is OrderKind.LEX:
            return tuple(exponents[v] for v in self.ranking)
        if self.kind is OrderKind.DEGLEX:
            return (sum(exponents), tuple(exponents[v] for v in self.ranking))
        return (sum(exponents), tuple(-exponents[v] for v in reversed(self.ranking)))

    def dense(self, mono: YMonomial) -> Dense:
        exps = [0] * self.size
        for v in mono:
            exps[v] += 1
        return tuple(exps)

    def describe(self, presentation: Presentation | None = None) -> dict:
        names = (
            [presentation.label(v) for v in self.ranking]
            if presentation is not None
            else [f"y{v + 1}" for v in self.ranking]
        )
        return {"kind": self.kind.value, "ranking": names}


def compare(order: MonomialOrder, a: YMonomial, b: YMonomial) -> int:
    """1 if a > b, -1 if a < b, 0 if equal."""
    ka = order.key(order.dense(a))
    kb = order.key(order.dense(b))
    return (ka > kb) - (ka < kb)


def _sparse(exponents: Dense) -> YMonomial:
    return tuple(v for v, a in enumerate(exponents) for _ in range(a))


def _divides(a: Dense, b: Dense) -> bool:
    return all(x <= y for x, y in zip(a, b))


# ---------------------------------------------------------------------------
# Groebner bases
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GroebnerBasis:
    """A reduced Groebner basis; each element is (leading term, trailing term)."""

    order: MonomialOrder
    elements: tuple[tuple[YMonomial, YMonomial], ...]
    statistics: dict = field(default_factory=dict, compare=False)

    def __len__(self) -> int:
        return len(self.elements)

    def binomials(self) -> list[Binomial]:
        return sorted(Binomial.of(lead, tail) for lead, tail in self.elements)

    def leading_terms(self) -> list[YMonomial]:
        return [lead for lead, _ in self.elements]

    def normal_form(self, mono: YMonomial) -> YMonomial:
        reducers = [(self.order.dense(lead), self.order.dense(tail)) for lead, tail in self.elements]
        return _sparse(_reduce_monomial(self.order.dense(mono), reducers))

    def reduces_to_zero(self, binomial: Binomial) -> bool:
        return self.normal_form(binomial.lhs) == self.normal_form(binomial.rhs)


def _reduce_monomial(mono: Dense, reducers: Sequence[tuple[Dense, Dense]]) -> Dense:
    """Replace leading terms by trailing terms until no leading term divides."""
    changed = True
    while changed:
        changed = False
        for lead, tail in reducers:
            if _divides(lead, mono):
                mono = tuple(m - a + b for m, a, b in zip(mono, lead, tail))
                changed = True
                break
    return mono


class _Reducer:
    """Reducers indexed by the variables of their leading terms."""

    def __init__(self, count: int):
        self.elements: list[tuple[Dense, Dense]] = []
        self._by_variable: list[list[int]] = [[] for _ in range(count)]

    def add(self, lead: Dense, tail: Dense) -> int:
        position = len(self.elements)
        self.elements.append((lead, tail))
        first = next(v for v, a in enumerate(lead) if a)
        self._by_variable[first].append(position)
        return position

    def reduce(self, mono: Dense) -> Dense:
        while True:
            for v, a in enumerate(mono):
                if not a:
                    continue
                hit = next(
                    (p for p in self._by_variable[v] if _divides(self.elements[p][0], mono)),
                    None,
                )
                if hit is not None:
                    lead, tail = self.elements[hit]
                    mono = tuple(m - x + y for m, x, y in zip(mono, lead, tail))
                    break
            else:
                return mono


def _orient(order: MonomialOrder, a: Dense, b: Dense) -> tuple[Dense, Dense]:
    return (a, b) if order.key(a) > order.key(b) else (b, a)


def buchberger(
    gens: Iterable[Binomial],
    order: MonomialOrder,
    presentation: Presentation | None = None,
    step_cap: int = DEFAULT_STEP_CAP,
) -> GroebnerBasis:
    """The reduced Groebner basis of the ideal generated by ``gens``.

    Pairs whose leading terms are coprime are skipped (first criterion). When a
    presentation is given, every new element is checked to lie in the toric
    ideal.
    """
    reducer = _Reducer(order.size)
    for binomial in sorted(set(gens)):
        if max(binomial.lhs + binomial.rhs, default=-1) >= order.size:
            raise PreconditionViolationError(
                f"{binomial} uses a variable outside the order's ranking.", operation="buchberger"
            )
        a, b = order.dense(binomial.lhs), order.dense(binomial.rhs)
        reducer.add(*_orient(order, a, b))
    initial = len(reducer.elements)
    pairs = deque(itertools.combinations(range(initial), 2))
    steps = skipped = 0
    while pairs:
        p, q = pairs.popleft()
        lead_p, tail_p = reducer.elements[p]
        lead_q, tail_q = reducer.elements[q]
        if not any(x and y for x, y in zip(lead_p, lead_q)):
            skipped += 1
            continue
        steps += 1
        if steps > step_cap:
            raise GroebnerTimeoutError(steps - 1)
        lcm = tuple(max(x, y) for x, y in zip(lead_p, lead_q))
        left = reducer.reduce(tuple(m - a + b for m, a, b in zip(lcm, lead_p, tail_p)))
        right = reducer.reduce(tuple(m - a + b for m, a, b in zip(lcm, lead_q, tail_q)))
        if left == right:
            continue
        if presentation is not None:
            if presentation.image(_sparse(left)) != presentation.image(_sparse(right)):
                raise InternalInconsistencyError(
                    "S-pair remainder left the toric ideal", operation="buchberger"
                )
        new = reducer.add(*_orient(order, left, right))
        pairs.extend((k, new) for k in range(new))
        if new % 100 == 0:
            logger.debug(f"buchberger: {new + 1} elements, {len(pairs)} pairs pending")

    elements = _interreduce(order, _minimalize(order, reducer.elements))
    logger.debug(f"buchberger: {steps} reductions, {skipped} pairs skipped, {len(elements)} elements")
    return GroebnerBasis(
        order=order,
        elements=tuple(sorted((_sparse(lead), _sparse(tail)) for lead, tail in elements)),
        statistics={
            "input": initial,
            "added": len(reducer.elements) - initial,
            "reductions": steps,
            "skipped_pairs": skipped,
        },
    )


def _minimalize(order: MonomialOrder, elements: Sequence[tuple[Dense, Dense]]) -> list[tuple[Dense, Dense]]:
    kept: list[tuple[Dense, Dense]] = []
    for lead, tail in sorted(elements, key=lambda e: order.key(e[0])):
        if not any(_divides(other, lead) for other, _ in kept):
            kept.append((lead, tail))
    return kept


def _interreduce(order: MonomialOrder, elements: list[tuple[Dense, Dense]]) -> list[tuple[Dense, Dense]]:
    reduced = []
    for k, (lead, tail) in enumerate(elements):
        others = elements[:k] + elements[k + 1:]
        reduced.append((lead, _reduce_monomial(tail, others)))
    return reduced


def is_quadratic(gb: GroebnerBasis) -> bool:
    return all(len(lead) == 2 for lead, _ in gb.elements)


# ---------------------------------------------------------------------------
# Certification and order search
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GenerationCertificate:
    certified: bool
    d_max: int
    basis: GroebnerBasis
    failing_target: tuple[int, ...] | None = None
    normal_forms: tuple[YMonomial, ...] = ()


def certify_generation(
    gens: Iterable[Binomial],
    order: MonomialOrder,
    presentation: Presentation,
    d_max: int = DEFAULT_D_MAX,
    fiber_cap: int = DEFAULT_FIBER_CAP,
    step_cap: int = DEFAULT_STEP_CAP,
) -> GenerationCertificate:
    """Certify that gens generate the toric ideal up to degree d_max.

    Each fiber of degree <= d_max must contain exactly one monomial in normal form.
    """
    checked = [presentation.binomial(b.lhs, b.rhs) for b in gens]
    basis = buchberger(checked, order, presentation=presentation, step_cap=step_cap)
    for e in range(1, d_max + 1):
        groups = graded_fibers(presentation, e, fiber_cap)
        for target in sorted(groups):
            members = groups[target]
            if len(members) < 2:
                continue
            forms = {basis.normal_form(m) for m in members}
            if len(forms) != 1:
                logger.info(f"generation fails at degree {e}: {len(forms)} normal forms")
                return GenerationCertificate(False, d_max, basis, target, tuple(sorted(forms)))
    return GenerationCertificate(True, d_max, basis)


@dataclass(frozen=True)
class OrderOutcome:
    order: MonomialOrder
    size: int | None
    quadratic: bool
    timed_out: bool = False


@dataclass(frozen=True)
class OrderSearchResult:
    outcomes: tuple[OrderOutcome, ...]
    first_quadratic: MonomialOrder | None


def _candidate_rankings(count: int, limit: int) -> list[tuple[int, ...]]:
    identity = tuple(range(count))
    rankings = [identity, tuple(reversed(identity))]
    for perm in itertools.islice(itertools.permutations(identity), limit + 2):
        if len(rankings) >= limit + 2:
            break
        if perm not in rankings:
            rankings.append(perm)
    return list(dict.fromkeys(rankings))


def search_quadratic_order(
    gens: Iterable[Binomial],
    presentation: Presentation,
    limit: int = DEFAULT_ORDER_SEARCH_LIMIT,
    step_cap: int = DEFAULT_STEP_CAP,
) -> OrderSearchResult:
    """Try Lex, DegLex and DegRevLex under several rankings; report each outcome."""
    gens = list(gens)
    outcomes = []
    first = None
    for kind in OrderKind:
        for ranking in _candidate_rankings(len(presentation), limit):
            order = MonomialOrder(kind, ranking)
            try:
                gb = buchberger(gens, order, presentation=presentation, step_cap=step_cap)
            except GroebnerTimeoutError:
                outcomes.append(OrderOutcome(order, None, False, timed_out=True))
                continue
            quadratic = is_quadratic(gb)
            outcomes.append(OrderOutcome(order, len(gb), quadratic))
            if quadratic and first is None:
                first = order
    return OrderSearchResult(tuple(outcomes), first)
