"""Random elements for randomized checks, drawn from a numpy Generator."""

import numpy as np

from app.tower.element import FieldElement, constant, one, series, zero
from app.tower.field import TowerField


def random_constant(field: TowerField, rng: np.random.Generator, nonzero: bool = True) -> int:
    """A random element of GF(q) in integer representation."""
    low = 1 if nonzero else 0
    return int(rng.integers(low, field.q))


def random_unit(field: TowerField, rng: np.random.Generator) -> FieldElement:
    """A random unit: nonzero residue, random tail."""
    if field.depth == 0:
        return constant(field, random_constant(field, rng))
    lower = field.residue_field()
    coefficients = [random_unit(lower, rng)]
    coefficients += [_random_coefficient(lower, rng) for _ in range(field.precision - 1)]
    return series(field, 0, coefficients)


def random_one_unit(field: TowerField, rng: np.random.Generator) -> FieldElement:
    """A random unit with residue 1."""
    if field.depth == 0:
        return constant(field, 1)
    lower = field.residue_field()
    coefficients = [one(lower)]
    coefficients += [_random_coefficient(lower, rng) for _ in range(field.precision - 1)]
    return series(field, 0, coefficients)


def random_element(field: TowerField, rng: np.random.Generator, spread: int = 2) -> FieldElement:
    """A random nonzero element with top valuation in [-spread, spread] and random units at every level."""
    if field.depth == 0:
        return random_unit(field, rng)
    lower = field.residue_field()
    coefficients = [random_element(lower, rng, spread)]
    coefficients += [_random_coefficient(lower, rng) for _ in range(field.precision - 1)]
    return series(field, int(rng.integers(-spread, spread + 1)), coefficients)


def _random_coefficient(field: TowerField, rng: np.random.Generator) -> FieldElement:
    if rng.integers(0, 3) == 0:
        return zero(field)
    return random_element(field, rng, spread=1)
