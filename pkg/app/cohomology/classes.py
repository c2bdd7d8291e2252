"""Cohomology classes mod ell^n over tower fields in symbol normal form.

A degree-m class is a Z/ell^n combination of the basis symbols {x_S} (|S| = m) and {zeta, x_S} (|S| = m - 1),
S running over increasing tuples of levels. Symbols of monomials reduce to this basis by anticommutativity,
{x, x} = {-1, x} and {zeta, zeta} = 0.
"""

import itertools
from collections import defaultdict
from collections.abc import Iterable, Iterator, Mapping, Sequence
from dataclasses import dataclass
from math import prod

from app.cohomology.keys import Key, basis_keys
from app.constants import MAX_DEGREE
from app.exceptions import DegreeUnsupported, DepthZero, FieldMismatch, NotUnramified
from app.tower.classes import ClassVector
from app.tower.field import TowerField

ZETA_SLOT = 0


def _check_degree(degree: int) -> None:
    if not 1 <= degree <= MAX_DEGREE:
        raise DegreeUnsupported(f'degree {degree} is outside 1..{MAX_DEGREE}')


@dataclass(frozen=True)
class CohClass:
    """A class in H^m(F, Z/ell^n(m-1)) written in the symbol basis.

    ``coefficients`` lists the nonzero (key, coefficient) pairs in basis order.
    """

    field: TowerField
    degree: int
    coefficients: tuple[tuple[Key, int], ...] = ()

    def __post_init__(self) -> None:
        """Reduce, drop zeros and sort.

        Raises:
            DegreeUnsupported: Degree outside 1..4.
            FieldMismatch: A key does not belong to this field and degree.
        """
        _check_degree(self.degree)
        order = {key: index for index, key in enumerate(basis_keys(self.field.depth, self.degree))}
        modulus = self.field.modulus
        merged: dict[Key, int] = defaultdict(int)
        for key, value in self.coefficients:
            if key not in order:
                raise FieldMismatch(f'{key} is not a degree {self.degree} key over {self.field}')
            merged[key] += value
        reduced = sorted(
            ((key, value % modulus) for key, value in merged.items() if value % modulus),
            key=lambda item: order[item[0]],
        )
        object.__setattr__(self, 'coefficients', tuple(reduced))

    def __add__(self, other: 'CohClass') -> 'CohClass':
        """Sum of classes of the same field and degree."""
        self._check(other)
        return CohClass(self.field, self.degree, self.coefficients + other.coefficients)

    def __neg__(self) -> 'CohClass':
        """Negative."""
        return CohClass(self.field, self.degree, tuple((key, -value) for key, value in self.coefficients))

    def __sub__(self, other: 'CohClass') -> 'CohClass':
        """Difference."""
        return self + (-other)

    def __rmul__(self, scalar: int) -> 'CohClass':
        """Integer multiple."""
        return CohClass(self.field, self.degree, tuple((key, scalar * value) for key, value in self.coefficients))

    @property
    def is_zero(self) -> bool:
        """Whether all coefficients vanish."""
        return not self.coefficients

    @property
    def period(self) -> int:
        """Order of the class, a power of ell."""
        modulus = self.field.modulus
        result = 1
        while any((result * value) % modulus for _, value in self.coefficients):
            result *= self.field.ell
        return result

    def coefficient(self, key: Key) -> int:
        """Coefficient of one basis symbol."""
        return dict(self.coefficients).get(key, 0)

    def vector(self) -> list[int]:
        """Dense coefficient vector in basis order."""
        values = dict(self.coefficients)
        return [values.get(key, 0) for key in basis_keys(self.field.depth, self.degree)]

    def describe(self) -> dict[str, int]:
        """Coefficients keyed by the printed basis symbol."""
        return {format_key(self.field, key, self.degree): value for key, value in self.coefficients}

    def _check(self, other: 'CohClass') -> None:
        if other.field != self.field or other.degree != self.degree:
            raise FieldMismatch(f'cannot combine degree {other.degree} over {other.field} with {self}')


def zero_class(field: TowerField, degree: int) -> CohClass:
    """The zero class."""
    return CohClass(field, degree)


def from_vector(field: TowerField, degree: int, vector: Sequence[int]) -> CohClass:
    """Class with the given dense coefficient vector."""
    keys = basis_keys(field.depth, degree)
    if len(vector) != len(keys):
        raise FieldMismatch(f'{len(vector)} coefficients for a rank {len(keys)} group')
    return CohClass(field, degree, tuple(zip(keys, (int(value) for value in vector), strict=True)))


def from_mapping(field: TowerField, degree: int, values: Mapping[Key, int]) -> CohClass:
    """Class with the given sparse coefficients."""
    return CohClass(field, degree, tuple(values.items()))


def basis_class(field: TowerField, degree: int, key: Key) -> CohClass:
    """A single basis symbol."""
    return CohClass(field, degree, ((key, 1),))


def slots(key: Key, degree: int) -> tuple[int, ...]:
    """Symbol entries of a basis key, 0 standing for zeta and i for x_i."""
    return (ZETA_SLOT, *key) if len(key) == degree - 1 else key


def format_key(field: TowerField, key: Key, degree: int) -> str:
    """Printed basis symbol such as ``{zeta,x1}``."""
    return '{' + ','.join(field.basis_names[slot] for slot in slots(key, degree)) + '}'


def normal_form(field: TowerField, entries: Sequence[int], coefficient: int) -> tuple[Key, int] | None:
    """Rewrite coefficient * {entries} in the basis.

    Args:
        field: The tower, which fixes the class of -1.
        entries: Symbol slots, 0 for zeta and i for x_i.
        coefficient: Integer multiplier.

    Returns:
        (key, coefficient) or None when the symbol vanishes.
    """
    current = list(entries)
    value = coefficient
    while True:
        value *= _sort_sign(current)
        if current.count(ZETA_SLOT) > 1:
            return None
        repeated = next((index for index in range(len(current) - 1) if current[index] == current[index + 1]), None)
        if repeated is None:
            return tuple(slot for slot in current if slot != ZETA_SLOT), value
        if field.p == 2:
            return None
        # {x, x} = {-1, x} = (q - 1)/2 {zeta, x}
        current[repeated] = ZETA_SLOT
        value *= (field.q - 1) // 2


def _sort_sign(entries: list[int]) -> int:
    """Sort in place by adjacent swaps, returning (-1)^(number of swaps of distinct entries)."""
    sign = 1
    for end in range(len(entries) - 1, 0, -1):
        for index in range(end):
            if entries[index] > entries[index + 1]:
                entries[index], entries[index + 1] = entries[index + 1], entries[index]
                sign = -sign
    return sign


def _accumulate(field: TowerField, degree: int, terms: Iterable[tuple[Sequence[int], int]]) -> CohClass:
    totals: dict[Key, int] = defaultdict(int)
    for entries, coefficient in terms:
        reduced = normal_form(field, entries, coefficient)
        if reduced is not None:
            totals[reduced[0]] += reduced[1]
    return from_mapping(field, degree, totals)


def symbol(arguments: Sequence[ClassVector]) -> CohClass:
    """The symbol {a_1, ..., a_m} of classes, expanded multilinearly over the monomial basis.

    Raises:
        DegreeUnsupported: For no arguments or more than four.
        FieldMismatch: For arguments over different fields.
    """
    if not arguments:
        raise DegreeUnsupported('a symbol needs at least one entry')
    _check_degree(len(arguments))
    field = arguments[0].field
    if any(argument.field != field for argument in arguments):
        raise FieldMismatch('symbol entries live in different fields')
    supports = [[(index, value) for index, value in enumerate(argument.exponents) if value] for argument in arguments]
    terms = (
        ([index for index, _ in choice], prod(value for _, value in choice)) for choice in itertools.product(*supports)
    )
    return _accumulate(field, len(arguments), terms)


def degree_one(vector: ClassVector) -> CohClass:
    """The Kummer character of a class, as a degree-1 class."""
    return symbol([vector])


def to_class_vector(character: CohClass) -> ClassVector:
    """Inverse of degree_one.

    Raises:
        DegreeUnsupported: If the class is not of degree 1.
    """
    if character.degree != 1:
        raise DegreeUnsupported(f'degree {character.degree} class is not a character')
    exponents = [0] * character.field.rank
    for key, value in character.coefficients:
        exponents[key[0] if key else ZETA_SLOT] = value
    return ClassVector(character.field, tuple(exponents))


def cup(first: CohClass, second: CohClass | ClassVector) -> CohClass:
    """Cup product; a ClassVector on the right stands for its Kummer character.

    Raises:
        FieldMismatch: For classes over different fields.
        DegreeUnsupported: If the degrees add up to more than four.
    """
    right = degree_one(second) if isinstance(second, ClassVector) else second
    if right.field != first.field:
        raise FieldMismatch(f'{first.field} and {right.field} differ')
    degree = first.degree + right.degree
    _check_degree(degree)
    terms = (
        ((*slots(left_key, first.degree), *slots(right_key, right.degree)), left_value * right_value)
        for left_key, left_value in first.coefficients
        for right_key, right_value in right.coefficients
    )
    return _accumulate(first.field, degree, terms)


def residue(cohomology_class: CohClass) -> CohClass:
    """Residue map to the residue tower: keep the symbols containing the top uniformizer and drop it.

    Raises:
        DepthZero: Over a finite field.
        DegreeUnsupported: For degree 1.
    """
    field = cohomology_class.field
    if field.depth == 0:
        raise DepthZero('residue map over a finite field')
    if cohomology_class.degree < 2:
        raise DegreeUnsupported('residues are taken from degree 2 on')
    top = field.depth
    kept = tuple((key[:-1], value) for key, value in cohomology_class.coefficients if key and key[-1] == top)
    return CohClass(field.residue_field(), cohomology_class.degree - 1, kept)


def inflate(cohomology_class: CohClass, target: TowerField) -> CohClass:
    """Inflation from the residue tower to ``target``.

    Raises:
        FieldMismatch: If the class does not live on the residue tower of ``target``.
    """
    if target.depth == 0 or cohomology_class.field != target.residue_field():
        raise FieldMismatch(f'{cohomology_class.field} is not the residue field of {target}')
    return CohClass(target, cohomology_class.degree, cohomology_class.coefficients)


def specialize(cohomology_class: CohClass) -> CohClass:
    """Specialization of an unramified class to the residue tower.

    Raises:
        DepthZero: Over a finite field.
        NotUnramified: If the class has a nonzero residue.
    """
    field = cohomology_class.field
    if field.depth == 0:
        raise DepthZero('specialization over a finite field')
    if any(key and key[-1] == field.depth for key, _ in cohomology_class.coefficients):
        raise NotUnramified(f'{cohomology_class.describe()} is ramified')
    return CohClass(field.residue_field(), cohomology_class.degree, cohomology_class.coefficients)


def torsion_classes(field: TowerField, degree: int, order: int) -> Iterator[CohClass]:
    """Every class killed by ``order`` (an ell-power dividing ell^n), in lexicographic coefficient order."""
    step = field.modulus // order
    rank = len(basis_keys(field.depth, degree))
    for values in itertools.product(range(order), repeat=rank):
        yield from_vector(field, degree, [step * value for value in values])
