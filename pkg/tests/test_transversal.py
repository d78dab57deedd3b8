"""Tests for transversal structures, Hibi relations and the linear substitution."""

import pytest

from src.core.groebner import compare
from src.core.toric import linear_relations, white_check
from src.core.transversal import (
    TransversalStructure,
    gorenstein_candidate,
    hibi_order,
    hibi_relations,
    normalize_orderings,
    substitute_linear,
    transversal_groebner,
)
from src.utils.errors import LengthMismatchError, PreconditionViolationError


def _comparable(a, b):
    return all(x <= y for x, y in zip(a, b)) or all(x >= y for x, y in zip(a, b))


# -----------------------------------------------------------------------
# Structure
# -----------------------------------------------------------------------


class TestTransversalStructure:
    def test_five_cycle_presentation(self, five_cycle):
        p = five_cycle.presentation()
        assert len(p) == 32
        assert p.label(0) == "y11111"
        assert p.label(31) == "y22222"

    def test_single_linear_relation(self, five_cycle):
        p = five_cycle.presentation()
        relations = list(linear_relations(p))
        assert len(relations) == 1
        assert relations[0].lhs == (p.index_of_vector((1, 1, 1, 1, 1)),)
        assert relations[0].rhs == (p.index_of_vector((2, 2, 2, 2, 2)),)

    def test_empty_subset(self):
        with pytest.raises(PreconditionViolationError):
            TransversalStructure.of(3, [(0,), ()])

    def test_no_subsets(self):
        with pytest.raises(PreconditionViolationError):
            TransversalStructure.of(3, [])

    def test_repeated_variable(self):
        with pytest.raises(PreconditionViolationError):
            TransversalStructure.of(3, [(0, 0)])

    def test_index_out_of_range(self):
        with pytest.raises(LengthMismatchError):
            TransversalStructure.of(3, [(0, 5)])


# -----------------------------------------------------------------------
# Hibi relations and order
# -----------------------------------------------------------------------


class TestHibi:
    def test_five_cycle_count(self, five_cycle):
        assert len(hibi_relations(five_cycle)) == 285

    def test_one_side_incomparable_other_a_chain(self, five_cycle):
        p = five_cycle.presentation()
        for move in hibi_relations(five_cycle):
            sides = [[p.variables[v].index_vector for v in side] for side in move.sides()]
            assert sorted(_comparable(*side) for side in sides) == [False, True]

    def test_leading_term_is_incomparable_pair(self, five_cycle):
        p = five_cycle.presentation()
        order = hibi_order(five_cycle)
        for move in hibi_relations(five_cycle):
            lhs_vectors = [p.variables[v].index_vector for v in move.lhs]
            lead, tail = (move.rhs, move.lhs) if _comparable(*lhs_vectors) else (move.lhs, move.rhs)
            assert compare(order, lead, tail) == 1

    def test_order_is_linear_extension(self, five_cycle):
        p = five_cycle.presentation()
        ranking = hibi_order(five_cycle).ranking
        position = {v: k for k, v in enumerate(ranking)}
        for u in p.variables:
            for v in p.variables:
                if u.index != v.index and all(a <= b for a, b in zip(u.index_vector, v.index_vector)):
                    assert position[v.index] < position[u.index]

    def test_variable_cap(self, five_cycle):
        with pytest.raises(PreconditionViolationError):
            hibi_relations(five_cycle, variable_cap=10)

    def test_hibi_and_linear_connect_degree_two(self, five_cycle):
        p = five_cycle.presentation()
        assert white_check(p, hibi_relations(five_cycle), 2).passed


# -----------------------------------------------------------------------
# Substitution and Groebner pipeline
# -----------------------------------------------------------------------


class TestSubstitution:
    def test_five_cycle_keeps_orderings(self, five_cycle):
        assert normalize_orderings(five_cycle) == five_cycle

    def test_reversed_subset_is_normalized(self):
        structure = TransversalStructure.of(5, [(1, 0), (1, 2), (2, 3), (3, 4), (4, 0)])
        normalized = normalize_orderings(structure)
        p = normalized.presentation()
        relation = list(linear_relations(p))[0]
        assert {relation.lhs[0], relation.rhs[0]} == {
            p.index_of_vector((1, 1, 1, 1, 1)),
            p.index_of_vector((2, 2, 2, 2, 2)),
        }

    def test_top_replaced_by_bottom(self, five_cycle):
        result = substitute_linear(five_cycle)
        assert result.top == 31 and result.bottom == 0
        assert all(result.top not in move.lhs + move.rhs for move in result.moves)
        assert len(result.moves) == 285

    def test_disjoint_subsets_have_no_linear_relation(self):
        structure = TransversalStructure.of(4, [(0, 1), (2, 3)])
        with pytest.raises(PreconditionViolationError):
            substitute_linear(structure)

    def test_five_cycle_quadratic_groebner_basis(self, five_cycle):
        report = transversal_groebner(five_cycle)
        assert report.hibi_count == 285
        assert report.hibi_is_groebner
        assert report.top_avoids_leading_terms
        assert report.leading_terms_preserved
        assert report.substituted_is_groebner
        assert report.with_linear_is_groebner
        assert report.quadratic
        assert report.passed


class TestGorenstein:
    def test_five_cycle(self, five_cycle):
        report = gorenstein_candidate(five_cycle)
        assert report.equal_sizes
        assert report.single_linear_relation
        assert report.hilbert.h_vector == (1, 26, 66, 26, 1)
        assert report.palindromic
        assert report.segre.dim == 6

    def test_single_subset(self):
        report = gorenstein_candidate(TransversalStructure.of(2, [(0, 1)]))
        assert report.hilbert.h_vector == (1,)
        assert report.palindromic
        assert not report.single_linear_relation
