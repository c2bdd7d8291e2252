"""Comparison of intersections of norm groups with the norm group of the compositum."""

from collections.abc import Sequence
from dataclasses import dataclass

from app.exceptions import FieldMismatch, InternalVerificationFailed, NotAField, PreconditionViolated
from app.extensions.chain import compositum
from app.extensions.cyclic import make_kummer, norm_class_group
from app.logging.logging_config import logger
from app.tower.element import FieldElement
from app.tower.field import TowerField
from app.tower.subgroup import Subgroup, full_group


@dataclass(frozen=True)
class NormCondition:
    """Both sides of the condition and whether they agree."""

    lhs: Subgroup
    rhs: Subgroup
    holds: bool


def norm_intersection_condition(field: TowerField, generators: Sequence[FieldElement]) -> NormCondition:
    """Test intersection_i N(k(a_i^(1/ell))) = N(k(a_1^(1/ell), ..., a_r^(1/ell))) * k*^ell.

    The right side is always inside the left side; the condition is that they are equal.

    Args:
        field: k, of depth at most 1.
        generators: Nonzero elements a_1, ..., a_r of k.

    Returns:
        The two subgroups and the verdict.

    Raises:
        PreconditionViolated: If k has depth above 1.
        FieldMismatch: If a generator lives elsewhere.
        UnsupportedShape: If the compositum leaves the supported shapes.
        InternalVerificationFailed: If the right side escapes the left side.
    """
    if field.depth > 1:
        raise PreconditionViolated(f'the condition is stated over fields of depth <= 1, got depth {field.depth}')
    lhs = full_group(field)
    for generator in generators:
        if generator.field != field:
            raise FieldMismatch(f'{generator.field} is not {field}')
        try:
            lhs = lhs.meet(norm_class_group(make_kummer(field, generator, 1)))
        except NotAField:
            continue
    rhs = full_group(field).scaled(field.ell).join(compositum(field, generators, 1).norm_class_group())
    if not rhs.issubset(lhs):
        logger.error('Compositum norms escape the intersection over {}', field)
        raise InternalVerificationFailed('norm group of the compositum is not inside every norm group')
    holds = lhs == rhs
    logger.debug('Norm condition over {} with {} generators: {}', field, len(generators), holds)
    return NormCondition(lhs, rhs, holds)
