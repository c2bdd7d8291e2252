"""Reduced-norm class groups and Suslin groups modulo ell^n-th powers.

Over a field of depth <= 1 reduced norms are surjective and every group below is the full class group. Above that,
two independent routes are available:

- the norm route spans N(L*) over supported cyclic splitting fields L of degree ind(alpha), plus the splitting fields
  of explicit norm witnesses; this is always a subgroup of Nrd(alpha);
- for period ell, the unit-part formula computes S(alpha) from the residue tower: its unit part is the preimage of
  N_{E0/k}(S(res of the unramified residue to E0)) * k*^ell, and the rest is generated by ell-th powers of the
  uniformizer and one element of R(alpha) of valuation one when there is one.

When both routes agree the result is flagged exact.
"""

from typing import NamedTuple

from app.cohomology.classes import CohClass
from app.cohomology.decomposition import decompose, top_class
from app.constants import Exactness
from app.exceptions import DegreeUnsupported, InternalVerificationFailed, UnsupportedShape
from app.extensions.cyclic import CyclicExtension, norm_class, norm_class_group, restrict
from app.extensions.splitting import brauer_index, extension_of_character, splitting_extensions
from app.logging.logging_config import logger
from app.rost.inductive import kummer_norm_witness
from app.rost.kernels import rost_kernel
from app.tower.classes import ClassVector, class_representative, kummer_class, lift_class
from app.tower.element import add, mul, neg, power
from app.tower.field import TowerField
from app.tower.sampling import random_element
from app.tower.subgroup import Subgroup, full_group, span
from app.utils import make_rng


class BoundedGroup(NamedTuple):
    """A computed subgroup and whether it is known to be the true one."""

    group: Subgroup
    exactness: Exactness

    @property
    def is_exact(self) -> bool:
        """Whether the group is certified."""
        return self.exactness == Exactness.EXACT


def _check_degree(alpha: CohClass) -> None:
    if alpha.degree != 2:
        raise DegreeUnsupported(f'reduced norms are defined for degree 2 classes, got degree {alpha.degree}')


def _is_trivial_case(alpha: CohClass) -> bool:
    return alpha.is_zero or alpha.field.depth <= 1


def valuation_one_kernel_class(alpha: CohClass) -> ClassVector | None:
    """The canonical class of R(alpha) with top coordinate 1, if R(alpha) has one."""
    field = alpha.field
    echelon = rost_kernel(alpha).echelon
    column = echelon[field.depth]
    if column[field.depth] != 1:
        return None
    return ClassVector(field, column)


def nrd_norm_span(alpha: CohClass) -> Subgroup:
    """The span of norm groups of known splitting fields, a subgroup of Nrd(alpha) modulo ell^n-th powers.

    Raises:
        DegreeUnsupported: If alpha is not of degree 2.
    """
    _check_degree(alpha)
    field = alpha.field
    if _is_trivial_case(alpha):
        return full_group(field)
    groups = []
    try:
        degree = brauer_index(alpha)
        groups = [norm_class_group(extension) for extension in splitting_extensions(alpha, degree)]
    except UnsupportedShape:
        logger.debug('Index of {} is not computable, using norm witnesses only', alpha.describe())
    witness_class = valuation_one_kernel_class(alpha)
    if witness_class is not None:
        witness = kummer_norm_witness(alpha, class_representative(witness_class))
        groups.append(norm_class_group(witness.extension))
    result = span(field, [])
    for group in groups:
        result = result.join(group)
    return result


def nrd_class_group(alpha: CohClass) -> BoundedGroup:
    """Nrd(alpha) modulo ell^n-th powers, with its exactness flag.

    The norm span is exact when alpha has period and index ell and the span agrees with the unit-part formula.

    Raises:
        DegreeUnsupported: If alpha is not of degree 2.
    """
    _check_degree(alpha)
    if _is_trivial_case(alpha):
        return BoundedGroup(full_group(alpha.field), Exactness.EXACT)
    lower = nrd_norm_span(alpha)
    ell = alpha.field.ell
    if alpha.period != ell or _safe_index(alpha) != ell:
        return BoundedGroup(lower, Exactness.LOWER_BOUND)
    formula = period_ell_suslin_group(alpha)
    if formula == lower:
        return BoundedGroup(lower, Exactness.EXACT)
    logger.warning('Norm span of {} is strictly smaller than the unit-part formula', alpha.describe())
    return BoundedGroup(lower, Exactness.LOWER_BOUND)


def _safe_index(alpha: CohClass) -> int | None:
    try:
        return brauer_index(alpha)
    except UnsupportedShape:
        return None


def suslin_group(alpha: CohClass) -> BoundedGroup:
    """S(alpha) = Nrd(alpha) * S(ell alpha)^ell modulo ell^n-th powers.

    Period ell classes are computed both ways, as Nrd(alpha) * F*^ell and by the unit-part formula, and are exact
    only when the two agree. A lower bound that already equals R(alpha) is exact because S(alpha) always lies in
    R(alpha).

    Raises:
        DegreeUnsupported: If alpha is not of degree 2.
        InternalVerificationFailed: If the norm route leaves the unit-part formula or claims a different exact group.
    """
    _check_degree(alpha)
    field = alpha.field
    if _is_trivial_case(alpha):
        return BoundedGroup(full_group(field), Exactness.EXACT)
    if alpha.period == field.ell:
        return _period_ell_suslin_group(alpha)
    reduced = nrd_class_group(alpha)
    inner = suslin_group(field.ell * alpha)
    group = reduced.group.join(inner.group.scaled(field.ell))
    if (reduced.is_exact and inner.is_exact) or group == rost_kernel(alpha):
        return BoundedGroup(group, Exactness.EXACT)
    return BoundedGroup(group, Exactness.LOWER_BOUND)


def _period_ell_suslin_group(alpha: CohClass) -> BoundedGroup:
    # S(ell alpha) = S(0) = F*, so the recursion reduces to Nrd(alpha) * F*^ell
    field = alpha.field
    formula = period_ell_suslin_group(alpha)
    reduced = nrd_class_group(alpha)
    recursive = reduced.group.join(full_group(field).scaled(field.ell))
    if recursive == formula:
        return BoundedGroup(formula, Exactness.EXACT)
    if reduced.is_exact or not recursive.issubset(formula):
        logger.error('Norm route and unit-part formula disagree for {}', alpha.describe())
        raise InternalVerificationFailed('Nrd(alpha) * F*^ell does not match the unit-part formula')
    logger.warning('Norm route gives only part of S(alpha) for {}', alpha.describe())
    return BoundedGroup(formula, Exactness.LOWER_BOUND)


def residue_norm_subgroup(residual: CohClass, extension: CyclicExtension | None) -> Subgroup:
    """N_{E0/k}(S(residual restricted to E0)) * k*^ell inside the residue class group.

    Args:
        residual: Degree-2 class of the residue tower k.
        extension: E0, or None when the residue character is trivial.

    Returns:
        The subgroup of k*/k*^(ell^n).
    """
    field = residual.field
    powers = full_group(field).scaled(field.ell)
    if extension is None:
        return suslin_group(residual).group.join(powers)
    restricted = suslin_group(restrict(residual, extension)).group
    return span(field, [norm_class(extension, vector) for vector in restricted.basis]).join(powers)


def period_ell_suslin_group(alpha: CohClass) -> Subgroup:
    """S(alpha) for a period-ell class over a field of depth >= 1, from residue data.

    Raises:
        DegreeUnsupported: If alpha is not of degree 2.
    """
    _check_degree(alpha)
    field = alpha.field
    if _is_trivial_case(alpha):
        return full_group(field)
    parts = decompose(alpha)
    residual = parts.unramified_residue
    extension = extension_of_character(residual.field, parts.ramified_character)
    units = residue_norm_subgroup(residual, extension)
    generators = [lift_class(field, vector) for vector in units.basis]
    generators.append(field.ell * top_class(field))
    witness_class = valuation_one_kernel_class(alpha)
    if witness_class is not None:
        generators.append(witness_class)
    return span(field, generators)


def quaternion_norm_sampling(
    field: TowerField,
    a: ClassVector,
    b: ClassVector,
    samples: int,
    seed: int,
) -> list[ClassVector]:
    """Classes of reduced norms x0^2 - a x1^2 - b x2^2 + ab x3^2 of random quaternions in (a, b).

    Args:
        field: Tower with ell = 2.
        a: Class of the first slot, represented by its canonical monomial.
        b: Class of the second slot.
        samples: Number of random quaternions.
        seed: Seed of the generator.

    Returns:
        The distinct classes hit, sorted by exponents.
    """
    rng = make_rng(seed)
    first = class_representative(a)
    second = class_representative(b)
    weights = [neg(first), neg(second), mul(first, second)]
    seen: dict[tuple[int, ...], ClassVector] = {}
    for _ in range(samples):
        value = power(random_element(field, rng), 2)
        for weight in weights:
            value = add(value, mul(weight, power(random_element(field, rng), 2)))
        if value.is_zero:
            continue
        vector = kummer_class(value)
        seen.setdefault(vector.exponents, vector)
    logger.debug('Quaternion norms of ({}, {}) hit {} classes', a.exponents, b.exponents, len(seen))
    return [seen[key] for key in sorted(seen)]

