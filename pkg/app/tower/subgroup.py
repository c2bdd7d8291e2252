"""Subgroups of F*/F*^(ell^n) = (Z/ell^n)^(d+1) in canonical Hermite form.

A subgroup H is stored through the lattice L = H + ell^n Z^(d+1). Its Hermite normal form is an upper triangular
basis with positive pivots dividing ell^n and entries right of each pivot reduced modulo that pivot, which is unique
for L. Dual lattices are taken with respect to the pairing (a, b) -> sum(a_i b_i) mod ell^n.
"""

import itertools
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass, field
from math import prod

from sympy import Matrix
from sympy.polys.domains import ZZ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.normalforms import hermite_normal_form

from app.exceptions import FieldMismatch
from app.tower.classes import ClassVector, basis_class
from app.tower.field import TowerField

Echelon = tuple[tuple[int, ...], ...]


def echelon_form(vectors: Iterable[Sequence[int]], rank: int, modulus: int) -> Echelon:
    """Hermite basis of the lattice spanned by ``vectors`` and modulus * Z^rank.

    Args:
        vectors: Integer vectors of length ``rank``.
        rank: Ambient rank.
        modulus: The exponent ell^n of the ambient group.

    Returns:
        The basis columns; column j vanishes below row j.
    """
    columns = [[int(value) % modulus for value in vector] for vector in vectors]
    columns += [[modulus if row == column else 0 for row in range(rank)] for column in range(rank)]
    matrix = DomainMatrix([[ZZ(column[row]) for column in columns] for row in range(rank)], (rank, len(columns)), ZZ)
    reduced = hermite_normal_form(matrix, D=ZZ(modulus**rank)).to_Matrix()
    return tuple(tuple(int(reduced[row, column]) for row in range(rank)) for column in range(rank))


def lattice_member(vector: Sequence[int], echelon: Echelon) -> bool:
    """Whether an integer vector lies in the lattice with basis ``echelon``."""
    residual = [int(value) for value in vector]
    for column in range(len(echelon) - 1, -1, -1):
        pivot = echelon[column][column]
        if residual[column] % pivot:
            return False
        factor = residual[column] // pivot
        residual = [value - factor * entry for value, entry in zip(residual, echelon[column], strict=True)]
    return True


def dual_echelon(echelon: Echelon, modulus: int) -> Echelon:
    """Hermite basis of the annihilator {y : y . x = 0 mod modulus for every x in the lattice}."""
    rank = len(echelon)
    basis = Matrix(rank, rank, lambda row, column: echelon[column][row])
    dual = basis.inv().T * modulus
    return echelon_form(([int(dual[row, column]) for row in range(rank)] for column in range(rank)), rank, modulus)


def kernel_echelon(rows: Iterable[Sequence[int]], rank: int, modulus: int) -> Echelon:
    """Solutions y of A y = 0 mod modulus for the matrix A with the given rows."""
    return dual_echelon(echelon_form(rows, rank, modulus), modulus)


@dataclass(frozen=True)
class Subgroup:
    """A subgroup of the class group of ``ambient``; equality is equality of echelons."""

    ambient: TowerField
    echelon: Echelon
    generators: tuple[ClassVector, ...] = field(default=(), compare=False, repr=False)

    @property
    def order(self) -> int:
        """Number of classes in the subgroup."""
        modulus = self.ambient.modulus
        return prod(modulus // self.echelon[index][index] for index in range(len(self.echelon)))

    @property
    def basis(self) -> tuple[ClassVector, ...]:
        """Nonzero echelon columns as classes."""
        vectors = (ClassVector(self.ambient, column) for column in self.echelon)
        return tuple(vector for vector in vectors if not vector.is_zero)

    def contains(self, vector: ClassVector) -> bool:
        """Membership test.

        Raises:
            FieldMismatch: If the class lives in another field.
        """
        self._check(vector.field)
        return lattice_member(vector.exponents, self.echelon)

    def issubset(self, other: 'Subgroup') -> bool:
        """Whether every class of this subgroup lies in ``other``."""
        self._check(other.ambient)
        return all(lattice_member(column, other.echelon) for column in self.echelon)

    def join(self, other: 'Subgroup') -> 'Subgroup':
        """The subgroup generated by both."""
        self._check(other.ambient)
        return span(self.ambient, self.basis + other.basis)

    def meet(self, other: 'Subgroup') -> 'Subgroup':
        """Intersection, as the annihilator of the sum of annihilators."""
        self._check(other.ambient)
        modulus = self.ambient.modulus
        annihilators = dual_echelon(self.echelon, modulus) + dual_echelon(other.echelon, modulus)
        combined = echelon_form(annihilators, self.ambient.rank, modulus)
        return Subgroup(self.ambient, dual_echelon(combined, modulus))

    def scaled(self, factor: int) -> 'Subgroup':
        """Image under v -> factor * v."""
        return span(self.ambient, [factor * vector for vector in self.basis])

    def elements(self) -> Iterator[ClassVector]:
        """Every class of the subgroup, each exactly once, in a fixed order."""
        modulus = self.ambient.modulus
        ranges = [range(modulus // self.echelon[index][index]) for index in range(len(self.echelon))]
        for factors in itertools.product(*ranges):
            exponents = [0] * self.ambient.rank
            for factor, column in zip(factors, self.echelon, strict=True):
                exponents = [value + factor * entry for value, entry in zip(exponents, column, strict=True)]
            yield ClassVector(self.ambient, tuple(exponents))

    def describe(self) -> list[list[int]]:
        """Canonical generators for JSON output."""
        return [list(vector.exponents) for vector in self.basis]

    def _check(self, other: TowerField) -> None:
        if other != self.ambient:
            raise FieldMismatch(f'{other} is not {self.ambient}')


def span(ambient: TowerField, generators: Iterable[ClassVector]) -> Subgroup:
    """The subgroup generated by ``generators``.

    Raises:
        FieldMismatch: If a generator lives in another field.
    """
    gathered = tuple(generators)
    for generator in gathered:
        if generator.field != ambient:
            raise FieldMismatch(f'{generator.field} is not {ambient}')
    echelon = echelon_form((vector.exponents for vector in gathered), ambient.rank, ambient.modulus)
    return Subgroup(ambient, echelon, gathered)


def full_group(ambient: TowerField) -> Subgroup:
    """The whole class group."""
    return span(ambient, [basis_class(ambient, index) for index in range(ambient.rank)])


def trivial_group(ambient: TowerField) -> Subgroup:
    """The subgroup of ell^n-th powers."""
    return span(ambient, [])


def kernel(ambient: TowerField, rows: Iterable[Sequence[int]]) -> Subgroup:
    """Classes v with A v = 0 mod ell^n for the matrix A given by ``rows``."""
    return Subgroup(ambient, kernel_echelon(rows, ambient.rank, ambient.modulus))
