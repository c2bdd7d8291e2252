"""R(alpha) against S(alpha): the quotient, its residue-field description for period ell, and witnesses."""

from dataclasses import dataclass
from typing import Any

from app.cohomology.classes import CohClass
from app.cohomology.decomposition import decompose
from app.constants import Exactness, ReportStatus
from app.exceptions import DegreeUnsupported, InternalVerificationFailed
from app.extensions.cyclic import norm_class_group
from app.extensions.splitting import extension_of_character
from app.logging.logging_config import logger
from app.rost.kernels import rost_kernel
from app.rost.suslin import residue_norm_subgroup, suslin_group
from app.tower.classes import ClassVector
from app.tower.subgroup import Subgroup, full_group


@dataclass(frozen=True)
class RostReport:
    """Comparison of the Rost kernel with the Suslin group of one class."""

    alpha: CohClass
    period: int
    rost: Subgroup
    suslin: Subgroup
    suslin_exactness: Exactness
    quotient_order: int
    rhs_order: int | None
    witnesses: tuple[ClassVector, ...]
    status: ReportStatus

    def to_json(self) -> dict[str, Any]:
        """JSON form with stable keys."""
        return {
            'alpha': self.alpha.describe(),
            'period': self.period,
            'R': self.rost.describe(),
            'S': self.suslin.describe(),
            's_exact': self.suslin_exactness == Exactness.EXACT,
            'quotient_order': self.quotient_order,
            'rhs_order': self.rhs_order,
            'witnesses': [list(vector.exponents) for vector in self.witnesses],
            'status': str(self.status),
        }


def quotient_rhs_order(alpha: CohClass) -> int:
    """Order of (R(res) cap N_{E0/k}(E0*)) / (N_{E0/k}(S(res_{E0})) k*^ell), computed on the residue tower.

    ``res`` is the unramified residue of alpha and E0 the extension cut out by its residue character.

    Args:
        alpha: Class of period ell over a field of depth >= 1.

    Returns:
        The order of the quotient.

    Raises:
        DegreeUnsupported: If alpha is not of degree 2.
        InternalVerificationFailed: If the denominator is not contained in the numerator.
    """
    if alpha.degree != 2:
        raise DegreeUnsupported(f'quotient of a degree {alpha.degree} class')
    parts = decompose(alpha)
    residual = parts.unramified_residue
    field = residual.field
    extension = extension_of_character(field, parts.ramified_character)
    norms = full_group(field) if extension is None else norm_class_group(extension)
    numerator = rost_kernel(residual).meet(norms)
    denominator = residue_norm_subgroup(residual, extension)
    if not denominator.issubset(numerator):
        logger.error('Residue-field denominator escapes the numerator for {}', alpha.describe())
        raise InternalVerificationFailed('N(S(res_E0)) k*^ell is not inside R(res) cap N(E0*)')
    return numerator.order // denominator.order


def quotient_report(alpha: CohClass) -> RostReport:
    """Compute R(alpha), S(alpha), their quotient and the classes of R(alpha) outside S(alpha).

    For period ell and depth >= 1 the quotient order is also computed from residue-field data. A mismatch with an
    exact Suslin group means one of the two code paths is wrong.

    Raises:
        DegreeUnsupported: If alpha is not of degree 2.
        InternalVerificationFailed: If S(alpha) is not inside R(alpha) or the two quotient orders disagree.
    """
    rost = rost_kernel(alpha)
    suslin, exactness = suslin_group(alpha)
    if not suslin.issubset(rost):
        logger.error('S(alpha) is not inside R(alpha) for {}', alpha.describe())
        raise InternalVerificationFailed('S(alpha) escapes R(alpha)')
    quotient = rost.order // suslin.order
    field = alpha.field
    rhs = None
    if alpha.period == field.ell and field.depth >= 1:
        rhs = quotient_rhs_order(alpha)
        if exactness == Exactness.EXACT and rhs != quotient:
            logger.error('Quotient orders disagree for {}: {} != {}', alpha.describe(), quotient, rhs)
            raise InternalVerificationFailed(f'|R/S| = {quotient} but the residue-field quotient has order {rhs}')
    witnesses = tuple(vector for vector in rost.basis if not suslin.contains(vector))
    status = _status(witnesses, exactness)
    if status == ReportStatus.COUNTEREXAMPLE:
        logger.error('R(alpha) != S(alpha) for {}', alpha.describe())
    elif status == ReportStatus.INCONCLUSIVE:
        logger.warning('Suslin group of {} is only a lower bound', alpha.describe())
    return RostReport(alpha, alpha.period, rost, suslin, exactness, quotient, rhs, witnesses, status)


def _status(witnesses: tuple[ClassVector, ...], exactness: Exactness) -> ReportStatus:
    if not witnesses:
        return ReportStatus.VERIFIED
    if exactness == Exactness.EXACT:
        return ReportStatus.COUNTEREXAMPLE
    return ReportStatus.INCONCLUSIVE
