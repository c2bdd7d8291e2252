"""Residue extensions, Brauer indices and the catalogue of supported cyclic extensions."""

from functools import cache

from app.cohomology.classes import CohClass
from app.cohomology.decomposition import decompose
from app.exceptions import DegreeUnsupported, UnsupportedShape
from app.extensions.cyclic import (
    CyclicExtension,
    cyclic_generators,
    make_kummer,
    make_unramified,
    restrict,
    splits,
)
from app.logging.logging_config import logger
from app.tower.classes import ClassVector, class_representative
from app.tower.field import TowerField
from app.utils import ell_valuation


def extension_of_character(field: TowerField, character: ClassVector) -> CyclicExtension | None:
    """The cyclic extension cut out by a character, given as a class a with chi = {a, -}.

    A character of order ell^j is (ell^n / ell^j) * b for a class b, and the extension is F(b^(1/ell^j)).

    Args:
        field: The field of the character.
        character: Class vector of the character.

    Returns:
        The extension, or None for the trivial character.

    Raises:
        UnsupportedShape: If F(b^(1/ell^j)) has no supported presentation.
    """
    order = character.order
    if order == 1:
        return None
    cofactor = field.modulus // order
    radicand = ClassVector(field, tuple(value // cofactor for value in character.exponents))
    return make_kummer(field, class_representative(radicand), ell_valuation(order, field.ell))


def residue_extension(alpha: CohClass) -> CyclicExtension | None:
    """The extension E0 of the residue tower cut out by the residue character of alpha."""
    return extension_of_character(alpha.field.residue_field(), decompose(alpha).ramified_character)


def brauer_index(alpha: CohClass) -> int:
    """Index of a Brauer class.

    ind(alpha) = [E0 : k] * ind(res_{E0} of the unramified residue), bottoming out at 1 over a finite field.

    Raises:
        DegreeUnsupported: If alpha is not of degree 2.
        UnsupportedShape: If some residue extension has no supported presentation.
    """
    if alpha.degree != 2:
        raise DegreeUnsupported(f'index of a degree {alpha.degree} class')
    if alpha.is_zero or alpha.field.depth == 0:
        return 1
    parts = decompose(alpha)
    residual = parts.unramified_residue
    extension = extension_of_character(residual.field, parts.ramified_character)
    if extension is None:
        return brauer_index(residual)
    return extension.degree * brauer_index(restrict(residual, extension))


@cache
def supported_cyclic_extensions(field: TowerField, degree: int) -> tuple[CyclicExtension, ...]:
    """One supported cyclic extension of the given degree per cyclic subgroup of F*/F*^degree, plus the unramified one.

    Kummer radicands whose class only involves zeta define the unramified extension and are skipped; subgroups
    without a supported presentation are skipped too.

    Args:
        field: The base field.
        degree: An ell-power.

    Returns:
        The extensions, unramified first.
    """
    if degree == 1:
        return (make_unramified(field, 1),)
    found = []
    try:
        found.append(make_unramified(field, degree))
    except UnsupportedShape:
        logger.debug('No unramified extension of degree {} over {}', degree, field)
    if degree <= field.modulus:
        for generator in cyclic_generators(field, degree):
            if not any(generator.exponents[1:]):
                continue
            try:
                found.append(make_kummer(field, class_representative(generator), ell_valuation(degree, field.ell)))
            except UnsupportedShape:
                logger.debug('Skipping unsupported radicand class {}', generator.exponents)
    return tuple(found)


def splitting_extensions(alpha: CohClass, degree: int) -> list[CyclicExtension]:
    """Supported cyclic extensions of the given degree that split alpha."""
    return [extension for extension in supported_cyclic_extensions(alpha.field, degree) if splits(alpha, extension)]
