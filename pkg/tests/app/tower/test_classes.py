"""Test module for app/tower/classes.py."""

import numpy as np
import pytest

from app.exceptions import DivisionByZero, FieldMismatch
from app.tower.classes import (
    ClassVector,
    all_classes,
    basis_class,
    class_representative,
    kummer_class,
    lift_class,
    minus_one_class,
    restrict_class,
    zero_class,
)
from app.tower.element import zero
from app.tower.field import TowerField
from app.tower.notation import parse_element
from app.tower.sampling import random_element, random_one_unit


@pytest.mark.parametrize(
    ('text', 'exponents'),
    [('x1', (0, 1)), ('4*x1^2', (0, 0)), ('2+x1', (1, 0)), ('2*x1^3', (1, 1)), ('x1^-1', (0, 1))],
)
def test_kummer_class_over_local_field(f3x: TowerField, text: str, exponents: tuple[int, ...]) -> None:
    """Classes in GF(3)((x))*/squares with basis (zeta = 2, x)."""
    assert kummer_class(parse_element(f3x, text)).exponents == exponents


def test_kummer_class_of_zero(f3x: TowerField) -> None:
    """Zero has no class."""
    with pytest.raises(DivisionByZero):
        kummer_class(zero(f3x))


def test_kummer_class_is_a_homomorphism(f3xy: TowerField, rng: np.random.Generator) -> None:
    """class(a * b) = class(a) + class(b)."""
    for _ in range(50):
        a = random_element(f3xy, rng)
        b = random_element(f3xy, rng)
        assert kummer_class(a * b) == kummer_class(a) + kummer_class(b)


def test_representatives(f5xy: TowerField) -> None:
    """The canonical monomial of a class has that class."""
    for vector in all_classes(f5xy):
        assert kummer_class(class_representative(vector)) == vector


def test_exponents_are_reduced(f3x: TowerField) -> None:
    """Entries are taken modulo ell^n."""
    assert ClassVector(f3x, (3, -1)).exponents == (1, 1)
    with pytest.raises(FieldMismatch):
        ClassVector(f3x, (1, 0, 0))


def test_group_operations(f5x: TowerField) -> None:
    """Sum, negation and scalar multiples mod 4."""
    a = ClassVector(f5x, (1, 2))
    b = ClassVector(f5x, (3, 3))
    assert (a + b).exponents == (0, 1)
    assert (-a).exponents == (3, 2)
    assert (a - b).exponents == (2, 3)
    assert (2 * a).exponents == (2, 0)
    assert a.describe() == {'zeta': 1, 'x1': 2}


def test_order(f5x: TowerField) -> None:
    """Orders are powers of ell dividing ell^n."""
    assert ClassVector(f5x, (2, 0)).order == 2
    assert ClassVector(f5x, (1, 2)).order == 4
    assert zero_class(f5x).order == 1


def test_minus_one(f3x: TowerField, f5x: TowerField) -> None:
    """-1 is zeta over GF(3) and zeta^2 over GF(5)."""
    assert minus_one_class(f3x).exponents == (1, 0)
    assert minus_one_class(f5x).exponents == (2, 0)
    assert kummer_class(parse_element(f5x, '-1')) == minus_one_class(f5x)


def test_lift_and_restrict(f3x: TowerField, f3xy: TowerField) -> None:
    """Lifting appends a zero top coordinate; restriction drops it."""
    lifted = lift_class(f3xy, basis_class(f3x, 1))
    assert lifted == basis_class(f3xy, 1)
    assert restrict_class(lifted, 1) == basis_class(f3x, 1)
    with pytest.raises(FieldMismatch):
        lift_class(f3xy, basis_class(f3xy, 1))


def test_all_classes(f3xy: TowerField, f5x: TowerField) -> None:
    """Enumeration of the whole class group, or of a torsion part."""
    assert len(list(all_classes(f3xy))) == 8
    assert len(list(all_classes(f5x))) == 16
    assert len(list(all_classes(f5x, modulus=2))) == 4


@pytest.mark.parametrize(
    ('text', 'residue'),
    [('1+x1', '1'), ('1+2*x1^3', '1'), ('1+x2', '1'), ('1+x1*x2+x2^2', '1'), ('2+2*x2', '2'), ('x1+x1^2', 'x1')],
)
def test_class_depends_on_the_leading_term(f5xy: TowerField, text: str, residue: str) -> None:
    """One-units are ell^n-th powers by Hensel's lemma, so only the leading monomial counts."""
    expected = kummer_class(parse_element(f5xy, residue))
    assert kummer_class(parse_element(f5xy, text)) == expected


def test_random_one_units_have_trivial_class(f3xy: TowerField, rng: np.random.Generator) -> None:
    """Random units 1 + (higher terms) vanish in the class group."""
    for _ in range(50):
        assert kummer_class(random_one_unit(f3xy, rng)).is_zero
