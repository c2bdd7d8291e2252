"""Splitting Brauer classes along the top uniformizer, and the ramification criterion for cup products."""

from dataclasses import dataclass

from app.cohomology.classes import CohClass, cup, residue, specialize, symbol, to_class_vector
from app.exceptions import DegreeUnsupported, InternalVerificationFailed
from app.logging.logging_config import logger
from app.tower.classes import ClassVector, basis_class, kummer_class, lift_class, minus_one_class
from app.tower.element import FieldElement, valuation_split
from app.tower.field import TowerField


@dataclass(frozen=True)
class BrauerDecomposition:
    """alpha = unramified_part + {lift(ramified_character), uniformizer}.

    The split depends on the uniformizer: another choice of x_d moves classes between the two parts.
    """

    alpha: CohClass
    unramified_part: CohClass
    ramified_character: ClassVector
    uniformizer: str

    @property
    def unramified_residue(self) -> CohClass:
        """The class of the residue tower that inflates to the unramified part."""
        return specialize(self.unramified_part)

    def recompose(self) -> CohClass:
        """Rebuild alpha from its parts."""
        field = self.alpha.field
        return self.unramified_part + symbol([lift_character(field, self.ramified_character), top_class(field)])


def lift_character(field: TowerField, character: ClassVector) -> ClassVector:
    """Lift of a residue character to ``field`` along the monomial basis."""
    return lift_class(field, character)


def top_class(field: TowerField) -> ClassVector:
    """Class of the top uniformizer."""
    return basis_class(field, field.depth)


def decompose(alpha: CohClass) -> BrauerDecomposition:
    """Split a degree-2 class into its unramified part and the symbol carrying its residue.

    Raises:
        DegreeUnsupported: If alpha is not of degree 2.
    """
    if alpha.degree != 2:
        raise DegreeUnsupported(f'decomposition needs a degree 2 class, got degree {alpha.degree}')
    field = alpha.field
    character = to_class_vector(residue(alpha))
    ramified = symbol([lift_character(field, character), top_class(field)])
    return BrauerDecomposition(alpha, alpha - ramified, character, field.level_names[-1])


def is_ramification_compatible(alpha: CohClass, lam: FieldElement) -> bool:
    """Whether alpha cup (lam) has zero residue.

    The answer is computed twice: from the residue of the cup product, and from the equivalent condition
    r * alpha = {lift(residue character), (-1)^r lam} with r the valuation of lam.

    Args:
        alpha: Degree-2 class.
        lam: Nonzero element of the same field.

    Returns:
        Whether the residue vanishes.

    Raises:
        InternalVerificationFailed: If the two computations disagree.
    """
    valuation, _ = valuation_split(lam)
    lam_class = kummer_class(lam)
    direct = residue(cup(alpha, lam_class)).is_zero
    parts = decompose(alpha)
    signed = lam_class + valuation * minus_one_class(alpha.field)
    reformulated = (valuation * alpha - symbol([lift_character(alpha.field, parts.ramified_character), signed])).is_zero
    if direct != reformulated:
        logger.error('Ramification criterion disagrees for {} and {}', alpha.describe(), lam_class.describe())
        raise InternalVerificationFailed(f'residue test {direct} but reformulation {reformulated}')
    return direct
