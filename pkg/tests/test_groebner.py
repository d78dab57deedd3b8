"""Tests for monomial orders, Buchberger's algorithm and generation certificates."""

import pytest

from src.core.groebner import (
    MonomialOrder,
    OrderKind,
    buchberger,
    certify_generation,
    compare,
    is_quadratic,
    search_quadratic_order,
)
from src.core.toric import Binomial, build_presentation, exchange_relations, minimal_generators
from src.utils.errors import GroebnerTimeoutError, PreconditionViolationError


# -----------------------------------------------------------------------
# Orders
# -----------------------------------------------------------------------


class TestMonomialOrder:
    def test_ranking_must_be_permutation(self):
        with pytest.raises(PreconditionViolationError):
            MonomialOrder(OrderKind.LEX, (0, 0, 1))

    def test_lex(self):
        order = MonomialOrder.standard("lex", 3)
        assert compare(order, (0,), (1, 1)) == 1
        assert compare(order, (1, 1), (0,)) == -1
        assert compare(order, (0, 2), (0, 2)) == 0

    def test_deglex_compares_degree_first(self):
        order = MonomialOrder.standard(OrderKind.DEGLEX, 3)
        assert compare(order, (1, 1), (0,)) == 1
        assert compare(order, (0, 2), (1, 1)) == 1

    def test_degrevlex(self):
        order = MonomialOrder.standard(OrderKind.DEGREVLEX, 3)
        # y1*y3 < y2^2: the smallest variable y3 occurs on the left
        assert compare(order, (0, 2), (1, 1)) == -1
        assert compare(order, (0, 1), (0, 2)) == 1

    def test_ranking_reverses_variables(self):
        order = MonomialOrder(OrderKind.LEX, (2, 1, 0))
        assert compare(order, (2,), (0,)) == 1

    def test_describe(self, nonsep_presentation):
        order = MonomialOrder.standard("degrevlex", 6)
        assert order.describe(nonsep_presentation) == {
            "kind": "degrevlex",
            "ranking": ["y1", "y2", "y3", "y4", "y5", "y6"],
        }


# -----------------------------------------------------------------------
# Buchberger
# -----------------------------------------------------------------------


class TestBuchberger:
    def test_nonsep_generators_are_lex_basis(self, nonsep_presentation):
        gens = minimal_generators(nonsep_presentation, 2)
        gb = buchberger(gens, MonomialOrder.standard("lex", 6), presentation=nonsep_presentation)
        assert gb.binomials() == sorted(gens)
        assert gb.statistics["added"] == 0
        assert sorted(gb.leading_terms()) == [(0, 3), (0, 5), (2, 5)]
        assert is_quadratic(gb)

    def test_normal_forms_agree_on_fibers(self, nonsep_presentation):
        gens = minimal_generators(nonsep_presentation, 2)
        gb = buchberger(gens, MonomialOrder.standard("lex", 6))
        assert gb.normal_form((0, 3)) == gb.normal_form((1, 2))
        assert gb.reduces_to_zero(Binomial.of((0, 3, 5), (1, 2, 5)))
        assert not gb.reduces_to_zero(Binomial.of((0, 0), (1, 1)))

    def test_new_elements_are_added(self):
        # y1*y2 - y3^2 and y1 - y3 generate y3*y2 - y3^2 under lex
        gens = [Binomial.of((0, 1), (2, 2)), Binomial.of((0,), (2,))]
        gb = buchberger(gens, MonomialOrder.standard("lex", 3))
        assert gb.reduces_to_zero(Binomial.of((1, 2), (2, 2)))
        assert len(gb) == 2

    def test_step_cap(self, nonsep_presentation):
        gens = minimal_generators(nonsep_presentation, 2)
        with pytest.raises(GroebnerTimeoutError):
            buchberger(gens, MonomialOrder.standard("lex", 6), step_cap=0)

    def test_variable_outside_ranking(self):
        with pytest.raises(PreconditionViolationError):
            buchberger([Binomial.of((0, 3), (1, 2))], MonomialOrder.standard("lex", 3))

    def test_empty_input(self):
        gb = buchberger([], MonomialOrder.standard("lex", 2))
        assert len(gb) == 0
        assert gb.normal_form((0, 1)) == (0, 1)


# -----------------------------------------------------------------------
# Certificates and order search
# -----------------------------------------------------------------------


class TestCertification:
    def test_nonsep_certified(self, nonsep_presentation):
        gens = minimal_generators(nonsep_presentation, 3)
        certificate = certify_generation(
            gens, MonomialOrder.standard("lex", 6), nonsep_presentation, d_max=3
        )
        assert certificate.certified
        assert certificate.failing_target is None

    def test_missing_generator_detected(self, nonsep_presentation):
        gens = sorted(minimal_generators(nonsep_presentation, 2))[:2]
        certificate = certify_generation(
            gens, MonomialOrder.standard("lex", 6), nonsep_presentation, d_max=2
        )
        assert not certificate.certified
        assert len(certificate.normal_forms) == 2

    def test_squares_search_finds_quadratic_order(self, squares):
        p = build_presentation(squares)
        result = search_quadratic_order(exchange_relations(p), p, limit=2)
        assert result.first_quadratic is not None
        assert all(outcome.quadratic for outcome in result.outcomes)
