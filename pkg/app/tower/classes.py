"""The class group F*/F*^(ell^n) in the monomial basis (zeta, x1, ..., xd)."""

import itertools
from collections.abc import Iterator
from dataclasses import dataclass

from app.exceptions import DivisionByZero, FieldMismatch
from app.tower.element import FieldElement, monomial, residue, valuation_split
from app.tower.field import TowerField


@dataclass(frozen=True)
class ClassVector:
    """Exponent vector of a class in F*/F*^(ell^n), reduced into [0, ell^n)."""

    field: TowerField
    exponents: tuple[int, ...]

    def __post_init__(self) -> None:
        """Reduce the exponents and check the length.

        Raises:
            FieldMismatch: If the vector length is not depth + 1.
        """
        if len(self.exponents) != self.field.rank:
            raise FieldMismatch(f'class vector of length {len(self.exponents)} over {self.field}')
        modulus = self.field.modulus
        object.__setattr__(self, 'exponents', tuple(int(value) % modulus for value in self.exponents))

    def __add__(self, other: 'ClassVector') -> 'ClassVector':
        """Class of the product."""
        if other.field != self.field:
            raise FieldMismatch(f'{self.field} and {other.field} differ')
        return ClassVector(self.field, tuple(a + b for a, b in zip(self.exponents, other.exponents, strict=True)))

    def __neg__(self) -> 'ClassVector':
        """Class of the inverse."""
        return ClassVector(self.field, tuple(-value for value in self.exponents))

    def __sub__(self, other: 'ClassVector') -> 'ClassVector':
        """Class of the quotient."""
        return self + (-other)

    def __rmul__(self, scalar: int) -> 'ClassVector':
        """Class of the scalar-th power."""
        return ClassVector(self.field, tuple(scalar * value for value in self.exponents))

    @property
    def is_zero(self) -> bool:
        """Whether this is the class of an ell^n-th power."""
        return not any(self.exponents)

    @property
    def order(self) -> int:
        """Order in the class group."""
        modulus = self.field.modulus
        result = 1
        while any((result * value) % modulus for value in self.exponents):
            result *= self.field.ell
        return result

    def describe(self) -> dict[str, int]:
        """Nonzero coordinates keyed by basis name."""
        return {name: value for name, value in zip(self.field.basis_names, self.exponents, strict=True) if value}


def kummer_class(lam: FieldElement) -> ClassVector:
    """Class of a nonzero element: top valuation, then the class of the residue of its unit part.

    Raises:
        DivisionByZero: For zero.
    """
    if lam.is_zero:
        raise DivisionByZero('zero has no class')
    field = lam.field
    if field.depth == 0:
        return ClassVector(field, (field.constants.log(lam.unit[0]),))
    valuation, unit = valuation_split(lam)
    lower = kummer_class(residue(unit))
    return ClassVector(field, (*lower.exponents, valuation))


def class_representative(vector: ClassVector) -> FieldElement:
    """The monomial zeta^v0 * x1^v1 * ... * xd^vd with exponents in [0, ell^n)."""
    return monomial(vector.field, vector.exponents)


def zero_class(field: TowerField) -> ClassVector:
    """The trivial class."""
    return ClassVector(field, (0,) * field.rank)


def basis_class(field: TowerField, index: int) -> ClassVector:
    """Class of zeta (index 0) or of x_index."""
    return ClassVector(field, tuple(1 if position == index else 0 for position in range(field.rank)))


def minus_one_class(field: TowerField) -> ClassVector:
    """Class of -1: (q - 1)/2 times the class of zeta in odd characteristic, zero in characteristic 2."""
    if field.p == 2:
        return zero_class(field)
    return ClassVector(field, ((field.q - 1) // 2,) + (0,) * field.depth)


def lift_class(field: TowerField, vector: ClassVector) -> ClassVector:
    """View a class of the residue tower as a class of ``field`` (top coordinate 0).

    Raises:
        FieldMismatch: If ``vector`` does not live on the residue tower of ``field``.
    """
    if vector.field != field.residue_field():
        raise FieldMismatch(f'{vector.field} is not the residue field of {field}')
    return ClassVector(field, (*vector.exponents, 0))


def restrict_class(vector: ClassVector, depth: int) -> ClassVector:
    """Drop the coordinates above ``depth``; inverse of lift_class on classes with vanishing top coordinates."""
    return ClassVector(vector.field.subtower(depth), vector.exponents[: depth + 1])


def all_classes(field: TowerField, modulus: int | None = None) -> Iterator[ClassVector]:
    """Every class vector with entries in [0, modulus) in lexicographic order.

    Args:
        field: The tower.
        modulus: Entry bound, default ell^n.

    Yields:
        Class vectors.
    """
    bound = modulus or field.modulus
    for exponents in itertools.product(range(bound), repeat=field.rank):
        yield ClassVector(field, exponents)

