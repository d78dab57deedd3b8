"""Writers for instance files and reports."""

import logging
import sys
from pathlib import Path

from src.core.bases import MonomialBasis, ProductStructure
from src.core.transversal import TransversalStructure

logger = logging.getLogger(__name__)


def basis_to_text(basis: MonomialBasis) -> str:
    lines = [f"{basis.n} {basis.d}"]
    lines.extend(m.to_text() for m in basis.elements)
    return "\n".join(lines) + "\n"


def product_to_text(structure: ProductStructure) -> str:
    blocks = [basis_to_text(factor).rstrip("\n") for factor in structure.factors]
    return f"PRODUCT {structure.s}\n\n" + "\n\n".join(blocks) + "\n"


def transversal_to_text(structure: TransversalStructure) -> str:
    lines = [f"TRANSVERSAL {structure.s} {structure.n}"]
    lines.extend(" ".join(str(k + 1) for k in subset) for subset in structure.subsets)
    return "\n".join(lines) + "\n"


def structure_to_text(structure) -> str:
    if isinstance(structure, ProductStructure):
        return product_to_text(structure)
    if isinstance(structure, TransversalStructure):
        return transversal_to_text(structure)
    return basis_to_text(structure)


def write_text(path: str | Path, text: str) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8")
    logger.debug(f"wrote {path}")
    return path


def emit(text: str, output: str | Path | None = None) -> None:
    """Write to the output path, or to standard output when none is given."""
    if output is None:
        sys.stdout.write(text)
        sys.stdout.flush()
    else:
        write_text(output, text)
