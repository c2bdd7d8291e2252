"""Test module for app/rost/kernels.py."""

import pytest

from app.cohomology.classes import CohClass, symbol, zero_class
from app.exceptions import DegreeUnsupported
from app.rost.kernels import cup_matrix, rost_kernel, unit_description, unit_part, unit_subgroup
from app.tower.classes import ClassVector, kummer_class
from app.tower.field import TowerField
from app.tower.notation import parse_element
from app.tower.subgroup import full_group, span


def _symbol(field: TowerField, first: str, second: str) -> CohClass:
    return symbol([kummer_class(parse_element(field, first)), kummer_class(parse_element(field, second))])


def test_cup_matrix_of_mixed_class(f3xy: TowerField) -> None:
    """{x, y} cup (zeta), (x) and (y) are all the generator of H^3."""
    assert cup_matrix(_symbol(f3xy, 'x1', 'x2')) == [[1, 1, 1]]


def test_rost_kernel_of_mixed_class(f3xy: TowerField) -> None:
    """R({x, y}) = {v : v0 + v1 + v2 even}."""
    kernel = rost_kernel(_symbol(f3xy, 'x1', 'x2'))
    assert kernel.order == 4
    assert kernel.contains(ClassVector(f3xy, (1, 1, 0)))
    assert kernel.contains(ClassVector(f3xy, (0, 1, 1)))
    for excluded in ((0, 1, 0), (1, 0, 0), (1, 1, 1)):
        assert not kernel.contains(ClassVector(f3xy, excluded))


def test_rost_kernel_of_unramified_class(f3xy: TowerField) -> None:
    """R({zeta, x1}) = {v : v2 even}."""
    assert rost_kernel(_symbol(f3xy, 'zeta', 'x1')) == span(
        f3xy, [ClassVector(f3xy, (1, 0, 0)), ClassVector(f3xy, (0, 1, 0))]
    )


def test_rost_kernel_of_zero(f3xy: TowerField) -> None:
    """Every class is in R(0)."""
    assert rost_kernel(zero_class(f3xy, 2)) == full_group(f3xy)


def test_local_field_has_no_h3(f3x: TowerField) -> None:
    """Over a local field cup products into H^3 vanish."""
    assert rost_kernel(_symbol(f3x, 'zeta', 'x1')) == full_group(f3x)


def test_rost_kernel_needs_degree_two(f3x: TowerField) -> None:
    """R is defined for Brauer classes."""
    with pytest.raises(DegreeUnsupported):
        rost_kernel(zero_class(f3x, 1))


def test_unit_parts(f3xy: TowerField) -> None:
    """The unit part of R({x, y}) is generated by -x."""
    kernel = rost_kernel(_symbol(f3xy, 'x1', 'x2'))
    assert unit_subgroup(f3xy).order == 4
    assert unit_part(kernel) == span(f3xy, [ClassVector(f3xy, (1, 1, 0))])
    assert unit_description(kernel, 2) == unit_part(kernel)
