"""Rost kernels of biquaternion classes against similarity factors of their Albert forms."""

from dataclasses import dataclass
from typing import Any

from app.albert.forms import QuadraticForm, albert_form, albert_form_of_class, similarity_factors
from app.cohomology.classes import CohClass, symbol
from app.logging.logging_config import logger
from app.rost.kernels import rost_kernel
from app.rost.suslin import nrd_class_group
from app.tower.classes import kummer_class
from app.tower.element import FieldElement
from app.tower.subgroup import Subgroup, full_group


@dataclass(frozen=True)
class AlbertCheck:
    """R(alpha), G(phi) and the reduced-norm subgroup for one biquaternion class."""

    alpha: CohClass
    form: QuadraticForm
    rost: Subgroup
    similarity: Subgroup
    norms: Subgroup

    @property
    def kernel_matches_similarity(self) -> bool:
        """R(alpha) = G(phi)."""
        return self.rost == self.similarity

    @property
    def holds(self) -> bool:
        """R(alpha) = G(phi) = F*^2 Nrd(alpha)."""
        return self.kernel_matches_similarity and self.rost == self.norms

    def to_json(self) -> dict[str, Any]:
        """JSON form with stable keys."""
        return {
            'alpha': self.alpha.describe(),
            'form': self.form.describe(),
            'R': self.rost.describe(),
            'G': self.similarity.describe(),
            'nrd': self.norms.describe(),
            'holds': self.holds,
        }


def check_albert_class(alpha: CohClass) -> AlbertCheck:
    """Compare the three subgroups for a class written as a sum of at most two symbols.

    Raises:
        PreconditionViolated: If the field is not a square-class field or alpha needs more symbols.
    """
    form = albert_form_of_class(alpha)
    return _check(alpha, form)


def check_albert_symbols(a: FieldElement, b: FieldElement, c: FieldElement, d: FieldElement) -> AlbertCheck:
    """Compare R((a, b) + (c, d)), G(<a, b, -ab, -c, -d, cd>) and F*^2 Nrd.

    Raises:
        ZeroEntry: If an entry is zero.
        PreconditionViolated: If the field is not a square-class field.
    """
    form = albert_form(a, b, c, d)
    alpha = symbol([kummer_class(a), kummer_class(b)]) + symbol([kummer_class(c), kummer_class(d)])
    return _check(alpha, form)


def _check(alpha: CohClass, form: QuadraticForm) -> AlbertCheck:
    field = alpha.field
    norms = nrd_class_group(alpha).group.join(full_group(field).scaled(2))
    result = AlbertCheck(alpha, form, rost_kernel(alpha), similarity_factors(form), norms)
    if not result.holds:
        logger.error('Albert form subgroups disagree for {}', alpha.describe())
    return result
