"""Tests for toric presentations, relation families, fibers and the White check."""

import pytest

from src.core.bases import MonomialBasis, product_of, veronese_type
from src.core.monomials import Monomial
from src.core.toric import (
    Binomial,
    MoveIndex,
    MoveKind,
    MoveSet,
    build_presentation,
    exchange_relations,
    fiber,
    fiber_connected,
    graded_fibers,
    linear_relations,
    minimal_generators,
    permute_column,
    same_component,
    single_column_moves,
    white_check,
)
from src.utils.errors import (
    FiberTooLargeError,
    InternalInconsistencyError,
    PreconditionViolationError,
)


def _expected_quadrics(presentation):
    return {
        presentation.binomial(presentation.monomial("y1*y4"), presentation.monomial("y2*y3")),
        presentation.binomial(presentation.monomial("y1*y6"), presentation.monomial("y2*y5")),
        presentation.binomial(presentation.monomial("y3*y6"), presentation.monomial("y4*y5")),
    }


# -----------------------------------------------------------------------
# Presentation
# -----------------------------------------------------------------------


class TestPresentation:
    def test_variables_follow_basis_order(self, nonsep_presentation):
        p = nonsep_presentation
        assert len(p) == 6
        assert p.label(0) == "y1"
        assert p.variables[0].image == Monomial.of(1, 1, 1, 0)
        assert p.variables[5].image == Monomial.of(0, 0, 2, 1)

    def test_monomial_from_labels(self, nonsep_presentation):
        assert nonsep_presentation.monomial("y1*y4") == (0, 3)
        assert nonsep_presentation.monomial("y2^2") == (1, 1)

    def test_unknown_label(self, nonsep_presentation):
        with pytest.raises(KeyError):
            nonsep_presentation.monomial("y9")

    def test_binomial_outside_ideal(self, nonsep_presentation):
        with pytest.raises(InternalInconsistencyError):
            nonsep_presentation.binomial((0, 0), (1, 1))

    def test_binomial_sign_normalized(self):
        b = Binomial.of((1, 2), (0, 3))
        assert b.lhs == (0, 3) and b.rhs == (1, 2) and b.degree == 2

    def test_zero_binomial_rejected(self):
        with pytest.raises(ValueError):
            Binomial.of((0, 1), (1, 0))

    def test_product_labels_and_vectors(self):
        first = MonomialBasis.from_exponents([(1, 0, 0), (0, 1, 0)])
        second = MonomialBasis.from_exponents([(0, 1, 0), (0, 0, 1)])
        p = build_presentation(product_of(first, second))
        assert [v.label for v in p.variables] == ["y11", "y12", "y21", "y22"]
        assert p.variables[1].index_vector == (1, 2)
        assert p.variables[1].image == Monomial.of(1, 0, 1)


# -----------------------------------------------------------------------
# Relation families
# -----------------------------------------------------------------------


class TestRelations:
    def test_nonsep_exchange_contains_expected_quadrics(self, nonsep_presentation):
        moves = exchange_relations(nonsep_presentation)
        assert moves.kind is MoveKind.PROPER
        assert _expected_quadrics(nonsep_presentation) <= set(moves)
        assert all(m.degree == 2 for m in moves)

    @pytest.mark.parametrize("name", ["nonsep", "pentagon", "squares"])
    def test_exchange_matches_brute_force(self, request, name):
        basis = request.getfixturevalue(name)
        p = build_presentation(basis)
        rows = [m.exponents for m in basis.elements]
        position = {row: k for k, row in enumerate(rows)}
        expected = set()
        for r, f in enumerate(rows):
            for s, g in enumerate(rows):
                for i in range(basis.n):
                    for j in range(basis.n):
                        if i == j or f[i] <= g[i] or f[j] >= g[j]:
                            continue
                        t = list(f)
                        t[i] -= 1
                        t[j] += 1
                        u = list(g)
                        u[i] += 1
                        u[j] -= 1
                        if tuple(t) not in position or tuple(u) not in position:
                            continue
                        left = tuple(sorted((r, s)))
                        right = tuple(sorted((position[tuple(t)], position[tuple(u)])))
                        if left != right:
                            expected.add(p.binomial(left, right))
        assert set(exchange_relations(p)) == expected

    def test_generalized_contains_proper(self, nonsep_presentation):
        proper = set(exchange_relations(nonsep_presentation))
        generalized = set(exchange_relations(nonsep_presentation, generalized=True))
        assert proper <= generalized

    def test_squares_exchange(self, squares):
        p = build_presentation(squares)
        assert list(exchange_relations(p)) == [Binomial.of((0, 2), (1, 1))]

    def test_no_linear_relations_for_distinct_images(self):
        first = MonomialBasis.from_exponents([(1, 0, 0), (0, 1, 0)])
        second = MonomialBasis.from_exponents([(0, 1, 0), (0, 0, 1)])
        assert len(linear_relations(build_presentation(product_of(first, second)))) == 0

    def test_linear_relation_for_coincident_images(self):
        first = MonomialBasis.from_exponents([(1, 0), (0, 1)])
        p = build_presentation(product_of(first, first))
        # y12 and y21 both map to x1x2
        assert list(linear_relations(p)) == [Binomial.of((1,), (2,))]

    def test_single_column_requires_product(self, nonsep_presentation):
        with pytest.raises(PreconditionViolationError):
            single_column_moves(nonsep_presentation)

    def test_moveset_sorted_and_deduplicated(self):
        b = Binomial.of((0, 3), (1, 2))
        moves = MoveSet(MoveKind.CUSTOM, (b, b))
        assert len(moves) == 1 and b in moves


# -----------------------------------------------------------------------
# Fibers
# -----------------------------------------------------------------------


class TestFibers:
    def test_nonsep_fiber(self, nonsep_presentation):
        assert fiber(nonsep_presentation, Monomial.of(1, 2, 3, 0), 2) == [(0, 3), (1, 2)]

    def test_fiber_of_unreachable_target(self, nonsep_presentation):
        assert fiber(nonsep_presentation, Monomial.of(3, 0, 0, 0), 1) == []

    def test_fiber_cap(self, nonsep_presentation):
        with pytest.raises(FiberTooLargeError):
            fiber(nonsep_presentation, Monomial.of(1, 2, 3, 0), 2, fiber_cap=1)

    def test_graded_fibers_partition_all_monomials(self, nonsep_presentation):
        groups = graded_fibers(nonsep_presentation, 2)
        assert sum(len(v) for v in groups.values()) == 21

    def test_fiber_connected_by_its_own_relation(self, nonsep_presentation):
        moves = exchange_relations(nonsep_presentation)
        result = fiber_connected([(0, 3), (1, 2)], moves)
        assert result.connected
        assert len(result.components) == 1

    def test_fiber_disconnected_without_moves(self):
        result = fiber_connected([(0, 3), (1, 2)], [])
        assert not result.connected
        assert result.components == (((0, 3),), ((1, 2),))

    def test_move_index_applies_inside_larger_monomials(self):
        index = MoveIndex([Binomial.of((0, 3), (1, 2))])
        assert index.neighbours((0, 3, 5)) == {(1, 2, 5)}

    def test_same_component(self, nonsep_presentation):
        moves = exchange_relations(nonsep_presentation)
        assert same_component(nonsep_presentation, moves, (0, 3), (1, 2))
        assert not same_component(nonsep_presentation, moves, (0, 3), (0, 4))


# -----------------------------------------------------------------------
# White check and minimal generators
# -----------------------------------------------------------------------


class TestWhiteCheck:
    def test_nonsep_proper_exchanges(self, nonsep_presentation):
        report = white_check(nonsep_presentation, exchange_relations(nonsep_presentation), 3)
        assert report.passed
        assert report.first_failure is None
        assert [s.degree for s in report.per_degree] == [1, 2, 3]

    def test_no_moves_fails_with_witness(self, nonsep_presentation):
        report = white_check(nonsep_presentation, [], 2)
        assert not report.passed
        assert report.first_failure.degree == 2
        assert len(report.first_failure.components) == 2

    def test_d_max_must_be_at_least_two(self, nonsep_presentation):
        with pytest.raises(PreconditionViolationError):
            white_check(nonsep_presentation, [], 1)

    def test_product_of_veronese_types(self):
        structure = product_of(
            veronese_type(3, 1, (0, 0, 0), (1, 1, 1)),
            veronese_type(3, 2, (0, 0, 0), (1, 1, 1)),
        )
        p = build_presentation(structure)
        assert white_check(p, exchange_relations(p), 3).passed
        assert white_check(p, single_column_moves(p, 3), 3).passed


class TestMinimalGenerators:
    def test_nonsep_degree_two(self, nonsep_presentation):
        gens = minimal_generators(nonsep_presentation, 2)
        assert set(gens) == _expected_quadrics(nonsep_presentation)

    def test_nonsep_no_cubic_generators(self, nonsep_presentation):
        assert len(minimal_generators(nonsep_presentation, 3)) == 3

    def test_squares(self, squares):
        assert minimal_generators(build_presentation(squares), 3) == [Binomial.of((0, 2), (1, 1))]

    def test_d_max_positive(self, nonsep_presentation):
        with pytest.raises(PreconditionViolationError):
            minimal_generators(nonsep_presentation, 0)


class TestColumnPermutation:
    def test_permuted_matrix_reachable(self):
        structure = product_of(
            veronese_type(3, 1, (0, 0, 0), (1, 1, 1)),
            veronese_type(3, 1, (0, 0, 0), (1, 1, 1)),
        )
        p = build_presentation(structure)
        mono = tuple(sorted((p.index_of_vector((1, 2)), p.index_of_vector((3, 1)))))
        permuted = permute_column(p, mono, 1, [1, 0])
        assert permuted == tuple(sorted((p.index_of_vector((1, 1)), p.index_of_vector((3, 2)))))
        assert same_component(p, exchange_relations(p), mono, permuted)
