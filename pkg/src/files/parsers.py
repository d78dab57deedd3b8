"""Readers for basis, product and transversal input files.

Basis file::

    # comment
    4 3            <- n d
    1 1 1 0        <- one exponent vector per line
    ...

Product file: a ``PRODUCT s`` header followed by s basis blocks separated by
blank lines. Transversal file: a ``TRANSVERSAL s n`` header followed by one
line per subset listing 1-based variable indices in the chosen order.
"""

import logging
from pathlib import Path

from src.core.bases import MonomialBasis, ProductStructure, product_of
from src.core.monomials import Monomial
from src.core.transversal import TransversalStructure
from src.utils.errors import PolymatroidError, ParseError

logger = logging.getLogger(__name__)

Structure = MonomialBasis | ProductStructure | TransversalStructure


def _strip(line: str) -> str:
    return line.split("#", 1)[0].strip()


def _integers(text: str, line_number: int, path: str) -> list[int]:
    try:
        return [int(token) for token in text.split()]
    except ValueError:
        raise ParseError(f"expected integers, got '{text}'", line_number, path) from None


def _content_lines(text: str) -> list[tuple[int, str]]:
    """Numbered lines with comments removed; comment-only lines are dropped, blank ones kept as ''."""
    out = []
    for number, raw in enumerate(text.splitlines(), start=1):
        stripped = _strip(raw)
        if stripped or not raw.strip():
            out.append((number, stripped))
    return out


def _parse_basis_lines(lines: list[tuple[int, str]], path: str) -> MonomialBasis:
    rows = [(number, line) for number, line in lines if line]
    if not rows:
        raise ParseError("missing 'n d' header", None, path)
    header_number, header = rows[0]
    values = _integers(header, header_number, path)
    if len(values) != 2 or values[0] < 1 or values[1] < 0:
        raise ParseError("header must be 'n d' with n >= 1 and d >= 0", header_number, path)
    n, d = values
    monomials = []
    for number, line in rows[1:]:
        exponents = _integers(line, number, path)
        if len(exponents) != n:
            raise ParseError(f"expected {n} exponents, got {len(exponents)}", number, path)
        if any(a < 0 for a in exponents):
            raise ParseError("exponents must be non-negative", number, path)
        if sum(exponents) != d:
            raise ParseError(f"monomial has degree {sum(exponents)}, header says {d}", number, path)
        monomials.append(Monomial(tuple(exponents)))
    if not monomials:
        raise ParseError("basis has no monomials", header_number, path)
    return MonomialBasis.of(monomials)


def parse_basis(text: str, path: str = "") -> MonomialBasis:
    return _parse_basis_lines(_content_lines(text), path)


def parse_product(text: str, path: str = "") -> ProductStructure:
    lines = _content_lines(text)
    nonblank = [(number, line) for number, line in lines if line]
    if not nonblank:
        raise ParseError("empty product file", None, path)
    header_number, header = nonblank[0]
    tokens = header.split()
    if len(tokens) != 2 or tokens[0].upper() != "PRODUCT":
        raise ParseError("header must be 'PRODUCT s'", header_number, path)
    s = _integers(tokens[1], header_number, path)[0]

    blocks: list[list[tuple[int, str]]] = []
    current: list[tuple[int, str]] = []
    for number, line in lines:
        if number <= header_number:
            continue
        if line:
            current.append((number, line))
        elif current:
            blocks.append(current)
            current = []
    if current:
        blocks.append(current)
    if len(blocks) != s:
        raise ParseError(f"header announces {s} factors, found {len(blocks)}", header_number, path)
    factors = [_parse_basis_lines(block, path) for block in blocks]
    try:
        return product_of(*factors)
    except PolymatroidError as e:
        raise ParseError(str(e), header_number, path) from e


def parse_transversal(text: str, path: str = "") -> TransversalStructure:
    rows = [(number, line) for number, line in _content_lines(text) if line]
    if not rows:
        raise ParseError("empty transversal file", None, path)
    header_number, header = rows[0]
    tokens = header.split()
    if len(tokens) != 3 or tokens[0].upper() != "TRANSVERSAL":
        raise ParseError("header must be 'TRANSVERSAL s n'", header_number, path)
    s, n = _integers(" ".join(tokens[1:]), header_number, path)
    if len(rows) - 1 != s:
        raise ParseError(f"header announces {s} subsets, found {len(rows) - 1}", header_number, path)
    subsets = []
    for number, line in rows[1:]:
        indices = _integers(line, number, path)
        if not indices:
            raise ParseError("empty subset", number, path)
        if any(k < 1 or k > n for k in indices):
            raise ParseError(f"variable indices must lie in 1..{n}", number, path)
        if len(set(indices)) != len(indices):
            raise ParseError("subset repeats a variable", number, path)
        subsets.append([k - 1 for k in indices])
    return TransversalStructure.of(n, subsets)


def parse_structure(text: str, path: str = "") -> Structure:
    """Dispatch on the header keyword."""
    first = next((line for _, line in _content_lines(text) if line), "")
    keyword = first.split()[0].upper() if first else ""
    if keyword == "PRODUCT":
        return parse_product(text, path)
    if keyword == "TRANSVERSAL":
        return parse_transversal(text, path)
    return parse_basis(text, path)


def load_structure(path: str | Path) -> Structure:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise ParseError(f"cannot read file: {e.strerror or e}", None, str(path)) from e
    structure = parse_structure(text, str(path))
    logger.debug(f"loaded {type(structure).__name__} from {path}")
    return structure
