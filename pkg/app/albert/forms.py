"""Diagonal quadratic forms over towers of odd residue characteristic.

Isometry questions are decided on square classes: by Springer's theorem a form over k((x)) splits as
q1 + x * q2 with unit entries and its anisotropic dimension is the sum of those of the two residue forms. Over a
finite field of odd order the anisotropic part is determined by the dimension and the discriminant.
"""

from collections.abc import Sequence
from dataclasses import dataclass
from itertools import groupby

from app.cohomology.classes import CohClass, slots
from app.exceptions import (
    DegreeUnsupported,
    FieldMismatch,
    OddDimension,
    PreconditionViolated,
    ZeroEntry,
)
from app.tower.classes import ClassVector, all_classes, basis_class, class_representative, kummer_class, zero_class
from app.tower.element import FieldElement, from_integer, mul, neg
from app.tower.field import TowerField
from app.tower.notation import format_element
from app.tower.subgroup import Subgroup, span

SquareClass = tuple[int, ...]


def check_square_class_field(field: TowerField) -> None:
    """Forms are handled for ell = 2, n = 1 only.

    Raises:
        PreconditionViolated: Otherwise.
    """
    if field.ell != 2 or field.n != 1:
        raise PreconditionViolated(f'quadratic forms need ell = 2 and n = 1, got ell={field.ell}, n={field.n}')


@dataclass(frozen=True)
class QuadraticForm:
    """The diagonal form <a_1, ..., a_r>."""

    field: TowerField
    diagonal: tuple[FieldElement, ...]

    def __post_init__(self) -> None:
        """Validate the entries.

        Raises:
            PreconditionViolated: If the field is not a square-class field.
            FieldMismatch: If an entry lives elsewhere.
            ZeroEntry: If an entry is zero.
        """
        check_square_class_field(self.field)
        for entry in self.diagonal:
            if entry.field != self.field:
                raise FieldMismatch(f'{entry.field} is not {self.field}')
            if entry.is_zero:
                raise ZeroEntry('diagonal entries must be nonzero')

    @property
    def dim(self) -> int:
        """Dimension."""
        return len(self.diagonal)

    @property
    def classes(self) -> tuple[SquareClass, ...]:
        """Square classes of the entries."""
        return tuple(kummer_class(entry).exponents for entry in self.diagonal)

    def describe(self) -> list[str]:
        """Entries as element strings."""
        return [format_element(entry) for entry in self.diagonal]


def form_from_classes(field: TowerField, classes: Sequence[ClassVector]) -> QuadraticForm:
    """The form whose entries are the canonical representatives of ``classes``."""
    return QuadraticForm(field, tuple(class_representative(vector) for vector in classes))


def scale(form: QuadraticForm, rho: FieldElement) -> QuadraticForm:
    """rho * form."""
    return QuadraticForm(form.field, tuple(mul(rho, entry) for entry in form.diagonal))


def orthogonal_sum(first: QuadraticForm, second: QuadraticForm) -> QuadraticForm:
    """first + second.

    Raises:
        FieldMismatch: For forms over different fields.
    """
    if first.field != second.field:
        raise FieldMismatch(f'{first.field} and {second.field} differ')
    return QuadraticForm(first.field, first.diagonal + second.diagonal)


def _minus_one_bit(field: TowerField) -> int:
    return ((field.q - 1) // 2) % 2


def _finite_anisotropic_dimension(field: TowerField, entries: Sequence[SquareClass]) -> int:
    dim = len(entries)
    if dim % 2:
        return 1
    if dim == 0:
        return 0
    # (-1)^(dim/2) det is a square exactly when the form is hyperbolic
    discriminant = (dim // 2) * _minus_one_bit(field) + sum(entry[0] for entry in entries)
    return 0 if discriminant % 2 == 0 else 2


def _anisotropic_dimension(field: TowerField, entries: Sequence[SquareClass]) -> int:
    if field.depth == 0:
        return _finite_anisotropic_dimension(field, entries)
    lower = field.residue_field()
    units = [entry[:-1] for entry in entries if entry[-1] % 2 == 0]
    shifted = [entry[:-1] for entry in entries if entry[-1] % 2]
    return _anisotropic_dimension(lower, units) + _anisotropic_dimension(lower, shifted)


def anisotropic_dimension(form: QuadraticForm) -> int:
    """Dimension of the anisotropic part."""
    return _anisotropic_dimension(form.field, form.classes)


def witt_index(form: QuadraticForm) -> int:
    """Number of hyperbolic planes split off by the form."""
    return (form.dim - anisotropic_dimension(form)) // 2


def isotropic(form: QuadraticForm) -> bool:
    """Whether the form has a nontrivial zero."""
    return anisotropic_dimension(form) < form.dim


def discriminant_class(form: QuadraticForm) -> ClassVector:
    """Square class of the signed determinant (-1)^(r(r-1)/2) a_1 ... a_r."""
    field = form.field
    total = zero_class(field)
    for entry in form.diagonal:
        total = total + kummer_class(entry)
    sign = (form.dim * (form.dim - 1) // 2) * _minus_one_bit(field)
    return total + sign * basis_class(field, 0)


def similarity_factors(phi: QuadraticForm) -> Subgroup:
    """G(phi) = {rho : rho phi is isometric to phi} in F*/F*^2.

    rho phi and phi are isometric exactly when phi - rho phi is hyperbolic.

    Raises:
        OddDimension: For odd-dimensional forms.
    """
    if phi.dim % 2:
        raise OddDimension(f'similarity factors of a {phi.dim}-dimensional form')
    negated = scale(phi, from_integer(phi.field, -1))
    members = [
        vector
        for vector in all_classes(phi.field)
        if witt_index(orthogonal_sum(phi, scale(negated, class_representative(vector)))) == phi.dim
    ]
    return span(phi.field, members)


def albert_form(a: FieldElement, b: FieldElement, c: FieldElement, d: FieldElement) -> QuadraticForm:
    """<a, b, -ab, -c, -d, cd>, the Albert form of (a, b) + (c, d).

    Raises:
        ZeroEntry: If an argument is zero.
        FieldMismatch: For arguments over different fields.
    """
    field = a.field
    if any(entry.field != field for entry in (b, c, d)):
        raise FieldMismatch('Albert form entries live in different fields')
    if any(entry.is_zero for entry in (a, b, c, d)):
        raise ZeroEntry('Albert form of a symbol with a zero entry')
    return QuadraticForm(field, (a, b, neg(mul(a, b)), neg(c), neg(d), mul(c, d)))


def symbol_pairs(alpha: CohClass) -> list[tuple[ClassVector, ClassVector]]:
    """Write a class mod 2 as a sum of symbols {a_i, b_i}, one per distinct first slot of its basis keys.

    Raises:
        DegreeUnsupported: If alpha is not of degree 2.
    """
    if alpha.degree != 2:
        raise DegreeUnsupported(f'symbol pairs of a degree {alpha.degree} class')
    field = alpha.field
    entries = sorted(slots(key, 2) for key, _ in alpha.coefficients)
    pairs = []
    for first, group in groupby(entries, key=lambda entry: entry[0]):
        second = zero_class(field)
        for _, slot in group:
            second = second + basis_class(field, slot)
        pairs.append((basis_class(field, first), second))
    return pairs


def albert_form_of_class(alpha: CohClass) -> QuadraticForm:
    """Albert form of a class of period dividing 2 that is a sum of at most two symbols in the basis.

    Raises:
        PreconditionViolated: If the field is not a square-class field or alpha needs more than two symbols.
        DegreeUnsupported: If alpha is not of degree 2.
    """
    field = alpha.field
    check_square_class_field(field)
    pairs = symbol_pairs(alpha)
    if len(pairs) > 2:
        raise PreconditionViolated(f'{alpha.describe()} is not written as a sum of two symbols')
    trivial = (zero_class(field), zero_class(field))
    (a, b), (c, d) = (pairs + [trivial, trivial])[:2]
    return albert_form(*(class_representative(vector) for vector in (a, b, c, d)))
