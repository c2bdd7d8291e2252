"""Fixtures and setup to test the package."""

import numpy as np
import pytest

from app.tower.field import TowerField, make_tower
from app.utils import make_rng


@pytest.fixture
def gf3() -> TowerField:
    """GF(3) with classes mod 2."""
    return make_tower(3, 2, 1, 0)


@pytest.fixture
def f3x() -> TowerField:
    """GF(3)((x1)) with classes mod 2, the local field of most examples."""
    return make_tower(3, 2, 1, 1)


@pytest.fixture
def f3xy() -> TowerField:
    """GF(3)((x1))((x2)) with classes mod 2, the 2-local field of most examples."""
    return make_tower(3, 2, 1, 2)


@pytest.fixture
def f5x() -> TowerField:
    """GF(5)((x1)) with classes mod 4."""
    return make_tower(5, 2, 2, 1)


@pytest.fixture
def f5xy() -> TowerField:
    """GF(5)((x1))((x2)) with classes mod 4."""
    return make_tower(5, 2, 2, 2)


@pytest.fixture
def rng() -> np.random.Generator:
    """Generator with a fixed seed."""
    return make_rng(0)
