"""Tests for the input-file readers and writers."""

import pytest

from src.core.bases import MonomialBasis, ProductStructure, product_of
from src.core.transversal import TransversalStructure
from src.files.parsers import load_structure, parse_basis, parse_product, parse_structure, parse_transversal
from src.files.writers import emit, structure_to_text, write_text
from src.utils.errors import ParseError


class TestParseBasis:
    def test_nonsep_file(self, data_dir, nonsep):
        assert load_structure(data_dir / "nonsep.basis") == nonsep

    def test_comments_and_blank_lines(self):
        basis = parse_basis("# squares\n2 2\n\n2 0  # x1^2\n1 1\n0 2\n")
        assert len(basis) == 3

    def test_wrong_length(self):
        with pytest.raises(ParseError, match=":3:"):
            parse_basis("2 2\n2 0\n1 1 0\n", "b.txt")

    def test_wrong_degree(self):
        with pytest.raises(ParseError, match="degree"):
            parse_basis("2 2\n2 1\n")

    def test_non_integer(self):
        with pytest.raises(ParseError, match="integers"):
            parse_basis("2 2\n2 x\n")

    def test_no_monomials(self):
        with pytest.raises(ParseError):
            parse_basis("2 2\n")

    def test_missing_header(self):
        with pytest.raises(ParseError, match="header"):
            parse_basis("# nothing\n")


class TestParseProductAndTransversal:
    def test_product_file(self, data_dir):
        structure = load_structure(data_dir / "veronese_product.prod")
        assert isinstance(structure, ProductStructure)
        assert structure.s == 2
        assert [len(f) for f in structure.factors] == [3, 3]

    def test_product_factor_count(self):
        with pytest.raises(ParseError, match="announces 2"):
            parse_product("PRODUCT 2\n\n2 1\n1 0\n0 1\n")

    def test_five_cycle_file(self, data_dir, five_cycle):
        assert load_structure(data_dir / "five_cycle.trans") == five_cycle

    def test_transversal_index_range(self):
        with pytest.raises(ParseError, match="1..3"):
            parse_transversal("TRANSVERSAL 1 3\n1 4\n")

    def test_transversal_subset_count(self):
        with pytest.raises(ParseError):
            parse_transversal("TRANSVERSAL 2 3\n1 2\n")

    def test_missing_file(self, tmp_path):
        with pytest.raises(ParseError, match="cannot read"):
            load_structure(tmp_path / "absent.basis")


class TestWriters:
    @pytest.mark.parametrize(
        "structure",
        [
            MonomialBasis.from_exponents([(2, 0), (1, 1), (0, 2)]),
            product_of(
                MonomialBasis.from_exponents([(1, 0), (0, 1)]),
                MonomialBasis.from_exponents([(2, 0), (1, 1)]),
            ),
            TransversalStructure.of(3, [(0, 1), (2, 0)]),
        ],
    )
    def test_text_reads_back(self, structure):
        assert parse_structure(structure_to_text(structure)) == structure

    def test_write_text_creates_directories(self, tmp_path):
        path = write_text(tmp_path / "a" / "b.txt", "2 1\n1 0\n")
        assert path.read_text() == "2 1\n1 0\n"

    def test_emit_to_stdout(self, capsys):
        emit("hello\n")
        assert capsys.readouterr().out == "hello\n"
