"""Shared fixtures: the golden inputs under data/ and a clean settings cache."""

from pathlib import Path

import pytest

from src.config.env import reset_settings
from src.core.bases import MonomialBasis
from src.core.toric import build_presentation
from src.core.transversal import TransversalStructure

DATA = Path(__file__).resolve().parent.parent / "data"

NONSEP_ROWS = [
    (1, 1, 1, 0),
    (1, 0, 2, 0),
    (0, 2, 1, 0),
    (0, 1, 2, 0),
    (0, 1, 1, 1),
    (0, 0, 2, 1),
]

PENTAGON_ROWS = [
    (1, 1, 0, 0),
    (1, 0, 1, 0),
    (0, 1, 1, 0),
    (0, 1, 0, 1),
    (0, 0, 1, 1),
]


@pytest.fixture(autouse=True)
def clean_settings(monkeypatch):
    for name in ("D_MAX", "FIBER_CAP", "STEP_CAP", "JOBS", "SEED", "LOG_LEVEL"):
        monkeypatch.delenv(f"POLYMATROID_{name}", raising=False)
    reset_settings()
    yield
    reset_settings()


@pytest.fixture
def data_dir() -> Path:
    return DATA


@pytest.fixture
def nonsep() -> MonomialBasis:
    return MonomialBasis.from_exponents(NONSEP_ROWS)


@pytest.fixture
def nonsep_presentation(nonsep):
    return build_presentation(nonsep)


@pytest.fixture
def pentagon() -> MonomialBasis:
    return MonomialBasis.from_exponents(PENTAGON_ROWS)


@pytest.fixture
def squares() -> MonomialBasis:
    return MonomialBasis.from_exponents([(2, 0), (1, 1), (0, 2)])


@pytest.fixture
def five_cycle() -> TransversalStructure:
    return TransversalStructure.of(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
