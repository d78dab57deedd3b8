"""Transversal polymatroids, Hibi relations and the single-linear-relation pipeline.

A transversal basis is a product X_1 ... X_s of variable subsets. Each subset
carries a fixed ordering, and the presentation variable y_a picks the a_j-th
element of X_j. Index vectors are 1-based.

Hibi relations follow the convention y_a y_b - y_{a^b} y_{avb} with a^b the
componentwise max and avb the componentwise min (the reverse of the usual
lattice notation).
"""

import itertools
import logging
from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from src.core.bases import MonomialBasis, ProductStructure, product_of
from src.core.groebner import (
    DEFAULT_STEP_CAP,
    GroebnerBasis,
    MonomialOrder,
    OrderKind,
    buchberger,
    is_quadratic,
)
from src.core.invariants import HilbertData, hilbert_data, is_palindromic, segre_data
from src.core.monomials import Monomial
from src.core.toric import Binomial, MoveKind, MoveSet, Presentation, linear_relations
from src.utils.errors import LengthMismatchError, PreconditionViolationError

logger = logging.getLogger(__name__)

DEFAULT_HIBI_VARIABLE_CAP = 10_000


@dataclass(frozen=True)
class TransversalStructure:
    """Ordered variable subsets X_1, ..., X_s of x_1..x_n (0-based indices)."""

    n: int
    subsets: tuple[tuple[int, ...], ...]

    @classmethod
    def of(cls, n: int, subsets: Iterable[Iterable[int]]) -> "TransversalStructure":
        subsets = tuple(tuple(subset) for subset in subsets)
        if not subsets:
            raise PreconditionViolationError("A transversal structure needs at least one subset.", "transversal")
        for j, subset in enumerate(subsets, start=1):
            if not subset:
                raise PreconditionViolationError(f"X_{j} is empty.", "transversal")
            if len(set(subset)) != len(subset):
                raise PreconditionViolationError(f"X_{j} repeats a variable.", "transversal")
            if any(k < 0 or k >= n for k in subset):
                raise LengthMismatchError(n, max(subset) + 1, operation="transversal")
        return cls(n, subsets)

    @property
    def s(self) -> int:
        return len(self.subsets)

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(subset) for subset in self.subsets)

    def factor_sequences(self) -> list[list[Monomial]]:
        return [[Monomial.variable(self.n, k) for k in subset] for subset in self.subsets]

    def presentation(self) -> Presentation:
        return Presentation.from_factor_sequences(self.factor_sequences(), self.n)

    def product_structure(self) -> ProductStructure:
        return product_of(*(MonomialBasis.of(seq) for seq in self.factor_sequences()))

    def element(self, j: int, a: int) -> int:
        """The variable index at 1-based position a of X_j."""
        return self.subsets[j][a - 1]


def _meet_join(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    return tuple(map(max, a, b)), tuple(map(min, a, b))


def _comparable(a: tuple[int, ...], b: tuple[int, ...]) -> bool:
    return all(x <= y for x, y in zip(a, b)) or all(x >= y for x, y in zip(a, b))


def _check_cap(presentation: Presentation, variable_cap: int) -> None:
    if len(presentation) > variable_cap:
        raise PreconditionViolationError(
            f"{len(presentation)} variables exceed the Hibi enumeration cap of {variable_cap}.",
            operation="hibi_relations",
        )


def hibi_relations(
    structure: TransversalStructure, variable_cap: int = DEFAULT_HIBI_VARIABLE_CAP
) -> MoveSet:
    """One relation y_a y_b - y_max y_min per incomparable pair {a, b}."""
    presentation = structure.presentation()
    _check_cap(presentation, variable_cap)
    moves = []
    for u, v in itertools.combinations(presentation.variables, 2):
        if _comparable(u.index_vector, v.index_vector):
            continue
        high, low = _meet_join(u.index_vector, v.index_vector)
        moves.append(
            presentation.binomial(
                (u.index, v.index),
                (presentation.index_of_vector(high), presentation.index_of_vector(low)),
            )
        )
    logger.debug(f"{len(moves)} Hibi relations on {len(presentation)} variables")
    return MoveSet(MoveKind.HIBI, tuple(moves))


def hibi_order(structure: TransversalStructure) -> MonomialOrder:
    """DegRevLex with larger index vectors ranked higher (lexicographic linear extension).

    Variables are enumerated in lex order of their index vectors, so the ranking
    is simply the reversed enumeration. Under this ranking the leading term of
    each Hibi relation is the product y_a * y_b of the incomparable pair, and
    the top variable y_(|X_1|..|X_s|), being comparable to everything, never
    divides a leading term.
    """
    count = 1
    for size in structure.sizes:
        count *= size
    return MonomialOrder(OrderKind.DEGREVLEX, tuple(reversed(range(count))))


# ---------------------------------------------------------------------------
# Normalizing the orderings
# ---------------------------------------------------------------------------

def _orderings(subset: tuple[int, ...]) -> Iterable[tuple[int, ...]]:
    size = len(subset)
    for flip in (subset, tuple(reversed(subset))):
        for shift in range(size):
            yield flip[shift:] + flip[:shift]


def _place(subset: tuple[int, ...], first: int, last: int) -> tuple[int, ...]:
    for candidate in _orderings(subset):
        if candidate[0] == first and candidate[-1] == last:
            return candidate
    middle = tuple(k for k in subset if k not in (first, last))
    return (first,) + middle + (last,)


def _single_linear_relation(presentation: Presentation) -> Binomial:
    linear = linear_relations(presentation)
    if len(linear) != 1:
        raise PreconditionViolationError(
            f"Expected exactly one linear relation, found {len(linear)}.",
            operation="substitute_linear",
        )
    return linear.moves[0]


def normalize_orderings(structure: TransversalStructure) -> TransversalStructure:
    """Re-order each X_j so the only linear relation is y_(|X_1|,...,|X_s|) - y_(1,...,1).

    Rotations and reversals of the given ordering are preferred; otherwise the
    two required elements are moved to the ends.
    """
    presentation = structure.presentation()
    relation = _single_linear_relation(presentation)
    first_vector = presentation.variables[relation.lhs[0]].index_vector
    second_vector = presentation.variables[relation.rhs[0]].index_vector
    for top, bottom in ((second_vector, first_vector), (first_vector, second_vector)):
        subsets = []
        for j, subset in enumerate(structure.subsets):
            last = structure.element(j, top[j])
            first = structure.element(j, bottom[j])
            if first == last and len(subset) > 1:
                break
            subsets.append(_place(subset, first, last) if len(subset) > 1 else subset)
        else:
            normalized = TransversalStructure(structure.n, tuple(subsets))
            logger.debug(f"normalized orderings: {normalized.subsets}")
            return normalized
    raise PreconditionViolationError(
        "No ordering of the subsets makes the linear relation join the all-max and all-ones vectors.",
        operation="substitute_linear",
    )


@dataclass(frozen=True)
class SubstitutionResult:
    structure: TransversalStructure
    presentation: Presentation
    linear: Binomial
    top: int
    bottom: int
    moves: MoveSet


def substitute_linear(
    structure: TransversalStructure,
    moves: MoveSet | None = None,
    variable_cap: int = DEFAULT_HIBI_VARIABLE_CAP,
) -> SubstitutionResult:
    """Replace y_(|X_1|,...,|X_s|) by y_(1,...,1) in every move.

    ``moves`` refers to the presentation of ``structure`` as given; it defaults
    to the Hibi relations. The result lives in the presentation of the
    normalized structure.
    """
    normalized = normalize_orderings(structure)
    presentation = normalized.presentation()
    _check_cap(presentation, variable_cap)
    top = presentation.index_of_vector(normalized.sizes)
    bottom = presentation.index_of_vector((1,) * normalized.s)
    linear = presentation.binomial((top,), (bottom,))

    if moves is None:
        source_moves = hibi_relations(normalized, variable_cap).moves
    else:
        original = structure.presentation()
        by_factors = {v.factors: v.index for v in presentation.variables}

        def remap(mono):
            return tuple(by_factors[original.variables[v].factors] for v in mono)

        source_moves = tuple(
            presentation.binomial(remap(m.lhs), remap(m.rhs)) for m in moves
        )

    def substitute(mono):
        return tuple(sorted(bottom if v == top else v for v in mono))

    substituted = []
    for move in source_moves:
        lhs, rhs = substitute(move.lhs), substitute(move.rhs)
        if lhs != rhs:
            substituted.append(presentation.binomial(lhs, rhs))
    kind = MoveKind.HIBI if moves is None else moves.kind
    return SubstitutionResult(
        structure=normalized,
        presentation=presentation,
        linear=linear,
        top=top,
        bottom=bottom,
        moves=MoveSet(kind, tuple(substituted)),
    )


# ---------------------------------------------------------------------------
# Groebner and Gorenstein reports
# ---------------------------------------------------------------------------

def _leading_terms(order: MonomialOrder, moves: Iterable[Binomial]) -> list[tuple[int, ...]]:
    leads = []
    for move in moves:
        a, b = order.dense(move.lhs), order.dense(move.rhs)
        leads.append(move.lhs if order.key(a) > order.key(b) else move.rhs)
    return leads


@dataclass(frozen=True)
class TransversalGroebnerReport:
    structure: TransversalStructure
    linear: Binomial
    hibi_count: int
    hibi_is_groebner: bool
    top_avoids_leading_terms: bool
    leading_terms_preserved: bool
    substituted_is_groebner: bool
    with_linear_is_groebner: bool
    quadratic: bool
    basis: GroebnerBasis

    @property
    def passed(self) -> bool:
        return (
            self.hibi_is_groebner
            and self.top_avoids_leading_terms
            and self.leading_terms_preserved
            and self.substituted_is_groebner
            and self.with_linear_is_groebner
            and self.quadratic
        )


def _unchanged(gb: GroebnerBasis, gens: Sequence[Binomial]) -> bool:
    return gb.statistics.get("added") == 0 and gb.binomials() == sorted(set(gens))


def transversal_groebner(
    structure: TransversalStructure,
    variable_cap: int = DEFAULT_HIBI_VARIABLE_CAP,
    step_cap: int = DEFAULT_STEP_CAP,
) -> TransversalGroebnerReport:
    """Check that the Hibi relations, after substituting away the linear relation, form a quadratic GB."""
    result = substitute_linear(structure, variable_cap=variable_cap)
    normalized, presentation = result.structure, result.presentation
    order = hibi_order(normalized)
    hibi = list(hibi_relations(normalized, variable_cap))

    hibi_gb = buchberger(hibi, order, presentation=presentation, step_cap=step_cap)
    hibi_leads = _leading_terms(order, hibi)
    substituted = list(result.moves)
    substituted_gb = buchberger(substituted, order, presentation=presentation, step_cap=step_cap)
    full = substituted + [result.linear]
    full_gb = buchberger(full, order, presentation=presentation, step_cap=step_cap)

    preserved = sorted(_leading_terms(order, substituted)) == sorted(
        lead for lead, move in zip(hibi_leads, hibi)
        if _substitutes_nontrivially(move, result.top, result.bottom)
    )
    logger.info(
        f"transversal GB: {len(hibi)} Hibi relations, {len(substituted_gb)} after substitution"
    )
    return TransversalGroebnerReport(
        structure=normalized,
        linear=result.linear,
        hibi_count=len(hibi),
        hibi_is_groebner=_unchanged(hibi_gb, hibi),
        top_avoids_leading_terms=all(result.top not in lead for lead in hibi_leads),
        leading_terms_preserved=preserved,
        substituted_is_groebner=_unchanged(substituted_gb, substituted),
        with_linear_is_groebner=_unchanged(full_gb, full),
        quadratic=is_quadratic(substituted_gb),
        basis=substituted_gb,
    )


def _substitutes_nontrivially(move: Binomial, top: int, bottom: int) -> bool:
    def substitute(mono):
        return tuple(sorted(bottom if v == top else v for v in mono))

    return substitute(move.lhs) != substitute(move.rhs)


@dataclass(frozen=True)
class GorensteinReport:
    equal_sizes: bool
    single_linear_relation: bool
    hilbert: HilbertData
    palindromic: bool
    segre: HilbertData


def gorenstein_candidate(
    structure: TransversalStructure, max_degree: int | None = None
) -> GorensteinReport:
    """Palindromicity of the h-vector of K[B], next to the Segre product's own h-vector.

    The Hilbert data is computed whether or not the single-linear-relation
    condition holds; ``single_linear_relation`` records it.
    """
    sizes = structure.sizes
    single = len(linear_relations(structure.presentation())) == 1
    product = structure.product_structure()
    data = hilbert_data(product.flattened, max_degree)
    segre = segre_data(product, max_degree)
    return GorensteinReport(
        equal_sizes=len(set(sizes)) == 1,
        single_linear_relation=single,
        hilbert=data,
        palindromic=is_palindromic(data.h_vector),
        segre=segre,
    )
