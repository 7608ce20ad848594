"""
Fixtures compartilhadas dos testes do twistprod.
"""

import sys
from pathlib import Path

import numpy as np
import pytest

ROOT = Path(__file__).parent.parent
sys.path.append(str(ROOT))

from src.core.finite_groups import cyclic_group  # noqa: E402
from src.core.lie_core import heisenberg_algebra, make_algebra  # noqa: E402
from src.corpus import finite_corpus  # noqa: E402
from src.entity import GroupAction  # noqa: E402

EXAMPLES_DIR = ROOT / "data" / "examples"
GOLDEN_DIR = ROOT / "data" / "golden"


@pytest.fixture
def examples_dir() -> Path:
    return EXAMPLES_DIR


@pytest.fixture
def golden_dir() -> Path:
    return GOLDEN_DIR


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(0)


@pytest.fixture
def heisenberg():
    return heisenberg_algebra()


@pytest.fixture
def broken_jacobi():
    """Heisenberg com [e1, e2] = e1 acrescentado."""
    return make_algebra(3, [(1, 2, 1, 1.0), (1, 3, 2, -1.0)])


@pytest.fixture
def corpus():
    return finite_corpus()


@pytest.fixture
def z3_by_z2():
    """Z3, Z2, Z2 invertendo Z3 e Z3 agindo trivialmente em Z2."""
    z3, z2 = cyclic_group(3), cyclic_group(2)
    lam = GroupAction(z2, z3, [[0, 1, 2], [0, 2, 1]])
    mu = GroupAction(z3, z2, [[0, 1], [0, 1], [0, 1]])
    return z3, z2, lam, mu
