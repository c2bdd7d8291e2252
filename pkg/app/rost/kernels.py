"""Rost kernels R(alpha) = {lambda : alpha cup (lambda) = 0} as subgroups of the class group."""

from app.cohomology.classes import CohClass, basis_keys, cup
from app.exceptions import DegreeUnsupported
from app.tower.classes import basis_class
from app.tower.field import TowerField
from app.tower.subgroup import Subgroup, full_group, kernel, span


def cup_matrix(alpha: CohClass) -> list[list[int]]:
    """Rows of the linear map v -> alpha cup v, one row per basis symbol of the target degree.

    Raises:
        DegreeUnsupported: If the target degree exceeds four.
    """
    field = alpha.field
    columns = [cup(alpha, basis_class(field, index)).vector() for index in range(field.rank)]
    rows = len(basis_keys(field.depth, alpha.degree + 1))
    return [[column[row] for column in columns] for row in range(rows)]


def rost_kernel(alpha: CohClass) -> Subgroup:
    """R(alpha) for a degree-2 class.

    Raises:
        DegreeUnsupported: If alpha is not of degree 2.
    """
    if alpha.degree != 2:
        raise DegreeUnsupported(f'Rost kernels are defined for degree 2, got {alpha.degree}')
    return kernel(alpha.field, cup_matrix(alpha))


def unit_subgroup(field: TowerField) -> Subgroup:
    """Classes with vanishing top coordinate, the image of the units."""
    return span(field, [basis_class(field, index) for index in range(field.depth)])


def unit_part(group: Subgroup) -> Subgroup:
    """Intersection with the unit classes."""
    if group.ambient.depth == 0:
        return group
    return group.meet(unit_subgroup(group.ambient))


def unit_description(group: Subgroup, period: int) -> Subgroup:
    """The subgroup generated by the unit part of ``group`` and the period-th powers."""
    return unit_part(group).join(full_group(group.ambient).scaled(period))
