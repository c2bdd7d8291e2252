"""Test module for app/tower/subgroup.py."""

import numpy as np
import pytest

from app.exceptions import FieldMismatch
from app.tower.classes import ClassVector, all_classes
from app.tower.field import TowerField
from app.tower.subgroup import full_group, kernel, span, trivial_group


def test_span_of_the_basis_is_everything(f3x: TowerField) -> None:
    """span{(0,1), (1,0)} in (Z/2)^2 has order 4."""
    group = span(f3x, [ClassVector(f3x, (0, 1)), ClassVector(f3x, (1, 0))])
    assert group.order == 4
    assert group == full_group(f3x)


def test_membership_mod_four(f5x: TowerField) -> None:
    """span{(2,0)} in (Z/4)^2 has order 2 and contains (2,0) but not (1,0)."""
    group = span(f5x, [ClassVector(f5x, (2, 0))])
    assert group.order == 2
    assert group.contains(ClassVector(f5x, (2, 0)))
    assert not group.contains(ClassVector(f5x, (1, 0)))


def test_meet(f5x: TowerField) -> None:
    """span{(1,0)} cap span{(1,2)} = span{(2,0)}."""
    first = span(f5x, [ClassVector(f5x, (1, 0))])
    second = span(f5x, [ClassVector(f5x, (1, 2))])
    assert first.meet(second) == span(f5x, [ClassVector(f5x, (2, 0))])


def test_meet_matches_enumeration(f5x: TowerField) -> None:
    """Intersections agree with brute force over all 16 classes."""
    first = span(f5x, [ClassVector(f5x, (1, 1))])
    second = span(f5x, [ClassVector(f5x, (2, 0)), ClassVector(f5x, (0, 2))])
    expected = {vector for vector in all_classes(f5x) if first.contains(vector) and second.contains(vector)}
    assert set(first.meet(second).elements()) == expected


def test_canonical_form(f5x: TowerField) -> None:
    """Different generating sets of the same subgroup give equal subgroups."""
    first = span(f5x, [ClassVector(f5x, (1, 1)), ClassVector(f5x, (0, 2))])
    second = span(f5x, [ClassVector(f5x, (3, 1)), ClassVector(f5x, (2, 0))])
    assert first == second
    assert first.describe() == second.describe()


def test_kernel(f5x: TowerField) -> None:
    """Solutions of v0 = 0 mod 4."""
    group = kernel(f5x, [[1, 0]])
    assert group == span(f5x, [ClassVector(f5x, (0, 1))])
    assert group.order == 4


def test_kernel_with_torsion_rows(f5x: TowerField) -> None:
    """Solutions of 2 v0 = 0 mod 4 form a subgroup of order 8."""
    group = kernel(f5x, [[2, 0]])
    assert group.order == 8
    assert group.contains(ClassVector(f5x, (2, 3)))
    assert not group.contains(ClassVector(f5x, (1, 0)))


def test_elements(f3xy: TowerField) -> None:
    """Every class exactly once."""
    group = span(f3xy, [ClassVector(f3xy, (1, 1, 0)), ClassVector(f3xy, (0, 1, 1))])
    elements = list(group.elements())
    assert len(elements) == group.order == 4
    assert len(set(elements)) == 4
    assert all(group.contains(vector) for vector in elements)


def test_lattice_operations(f5x: TowerField) -> None:
    """join, issubset and scaled."""
    small = span(f5x, [ClassVector(f5x, (2, 0))])
    other = span(f5x, [ClassVector(f5x, (0, 1))])
    joined = small.join(other)
    assert joined.order == 8
    assert small.issubset(joined)
    assert not joined.issubset(small)
    assert full_group(f5x).scaled(2) == span(f5x, [ClassVector(f5x, (2, 0)), ClassVector(f5x, (0, 2))])
    assert trivial_group(f5x).order == 1


def test_field_mismatch(f3x: TowerField, f3xy: TowerField) -> None:
    """Subgroups only compare classes of their own field."""
    with pytest.raises(FieldMismatch):
        full_group(f3x).contains(ClassVector(f3xy, (0, 0, 0)))
    with pytest.raises(FieldMismatch):
        span(f3x, [ClassVector(f3xy, (0, 0, 1))])


def test_echelon_ignores_generator_order(f5xy: TowerField, rng: np.random.Generator) -> None:
    """Shuffling the generators and adding combinations of them leaves the echelon unchanged."""
    generators = [ClassVector(f5xy, (1, 2, 0)), ClassVector(f5xy, (0, 2, 2)), ClassVector(f5xy, (3, 0, 1))]
    group = span(f5xy, generators)
    for _ in range(20):
        shuffled = [generators[int(index)] for index in rng.permutation(len(generators))]
        extra = int(rng.integers(4)) * shuffled[0] + shuffled[1]
        other = span(f5xy, [*shuffled, extra])
        assert other == group
        assert other.echelon == group.echelon
        assert other.describe() == group.describe()
