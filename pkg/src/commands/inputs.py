"""Loading command inputs as the structure each command works on."""

from src.core.bases import MonomialBasis, ProductStructure
from src.core.toric import Presentation, build_presentation
from src.core.transversal import TransversalStructure
from src.files.parsers import load_structure
from src.utils.errors import ParseError


def load_source(path: str) -> MonomialBasis | ProductStructure:
    """A plain basis or a product; transversal files become their product structure."""
    structure = load_structure(path)
    if isinstance(structure, TransversalStructure):
        return structure.product_structure()
    return structure


def load_basis(path: str) -> MonomialBasis:
    source = load_source(path)
    return source.flattened if isinstance(source, ProductStructure) else source


def load_transversal(path: str) -> TransversalStructure:
    structure = load_structure(path)
    if not isinstance(structure, TransversalStructure):
        raise ParseError("expected a 'TRANSVERSAL s n' file", 1, path)
    return structure


def load_presentation(path: str) -> Presentation:
    """Transversal files keep their subset orderings; everything else goes through build_presentation."""
    structure = load_structure(path)
    if isinstance(structure, TransversalStructure):
        return structure.presentation()
    return build_presentation(structure)


def describe_source(source) -> dict:
    if isinstance(source, ProductStructure):
        return {"kind": "product", "n": source.n, "s": source.s, "factor_sizes": [len(f) for f in source.factors]}
    if isinstance(source, TransversalStructure):
        return {"kind": "transversal", "n": source.n, "s": source.s, "subset_sizes": list(source.sizes)}
    return {"kind": "basis", "n": source.n, "d": source.d, "size": len(source)}
