"""Tests for Hilbert functions, h-vectors, Segre data and Rees bidegrees."""

import pytest

from src.core.bases import MonomialBasis, veronese_type
from src.core.invariants import (
    Bidegree,
    h_vector,
    hilbert_data,
    hilbert_function,
    is_palindromic,
    krull_dim,
    rees_bidegrees,
    segre_data,
)
from src.core.toric import build_presentation, minimal_generators
from src.utils.errors import NotStabilizedError, PreconditionViolationError


# -----------------------------------------------------------------------
# Hilbert function and h-vector
# -----------------------------------------------------------------------


class TestHilbertFunction:
    def test_squares(self, squares):
        assert hilbert_function(squares, 4) == [1, 3, 5, 7, 9]

    def test_squares_data(self, squares):
        data = hilbert_data(squares)
        assert data.dim == 2
        assert data.h_vector == (1, 1)
        assert data.stabilized
        assert data.max_degree == 3

    def test_negative_degree(self, squares):
        with pytest.raises(PreconditionViolationError):
            hilbert_function(squares, -1)

    def test_krull_dim(self, nonsep, squares):
        assert krull_dim(squares) == 2
        assert krull_dim(nonsep) == 4

    def test_single_monomial(self):
        data = hilbert_data(MonomialBasis.from_exponents([(1, 1)]))
        assert data.dim == 1
        assert data.h_vector == (1,)

    def test_degree_zero_basis(self):
        data = hilbert_data(MonomialBasis.from_exponents([(0, 0, 0)]))
        assert data.dim == 0
        assert data.h_vector == (1,)
        assert data.stabilized
        assert set(data.values) == {1}

    def test_five_cycle(self, five_cycle):
        basis = five_cycle.product_structure().flattened
        assert len(basis) == 31
        data = hilbert_data(basis)
        assert data.values[1] == 31
        assert data.values[2] == 211
        assert data.values[6] == 9031
        assert data.dim == 5
        assert data.h_vector == (1, 26, 66, 26, 1)
        assert is_palindromic(data.h_vector)


class TestHVector:
    def test_not_stabilized(self):
        with pytest.raises(NotStabilizedError):
            h_vector([1, 3, 5], 1)

    def test_allow_unstable(self):
        h, stabilized = h_vector([1, 3, 5], 1, allow_unstable=True)
        assert h == (1, 2, 2)
        assert not stabilized

    def test_dimension_must_be_positive(self):
        with pytest.raises(PreconditionViolationError):
            h_vector([1, 1, 1], 0)

    def test_palindromes(self):
        assert is_palindromic((1, 26, 66, 26, 1))
        assert is_palindromic((1,))
        assert not is_palindromic((1, 2))


class TestSegre:
    def test_five_cycle_segre(self, five_cycle):
        data = segre_data(five_cycle.product_structure())
        assert data.dim == 6
        assert data.values[1] == 32
        assert data.h_vector == (1, 26, 66, 26, 1)


# -----------------------------------------------------------------------
# Rees algebra
# -----------------------------------------------------------------------


class TestRees:
    def test_squares_bidegrees(self, squares):
        report = rees_bidegrees(squares, 2, 3)
        assert [b.as_tuple() for b in report.bidegrees] == [(0, 2), (1, 1), (1, 1)]
        assert report.degree_one_count == 0

    def test_sep_basis_within_bound(self):
        basis = veronese_type(3, 2, (0, 0, 0), (1, 1, 1))
        report = rees_bidegrees(basis, 2, 3)
        assert report.within({(0, 2), (1, 1)})
        assert report.bidegrees

    def test_toric_part_matches_minimal_generators(self, squares):
        report = rees_bidegrees(squares, 2, 3)
        assert report.toric_part() == minimal_generators(build_presentation(squares), 3)

    def test_caps_positive(self, squares):
        with pytest.raises(PreconditionViolationError):
            rees_bidegrees(squares, 0, 3)

    def test_zero_bidegree_rejected(self):
        with pytest.raises(ValueError):
            Bidegree(0, 0)
