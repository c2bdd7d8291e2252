"""Cyclic extensions of tower fields in a standardized presentation.

Two shapes are built:

- unramified of degree f: the same levels over GF(q^f), with GF(q) embedded by a fixed root of the minimal
  polynomial of its generator;
- Kummer ramified at level j: L = F(T), T^(ell^m) = b with b = c * x_j^s modulo ell^m-th powers, c a monomial of the
  level j - 1 subtower and s prime to ell. The standardized tower replaces x_j by a uniformizer P with
  P^(ell^m) = gamma * x_j, gamma a monomial in the lower levels, and stores ell^m times more coefficients at level j
  so that base elements embed exactly.
"""

import itertools
from dataclasses import dataclass, replace
from functools import cache

import numpy as np

from app.cohomology.classes import CohClass, basis_keys, slots, symbol
from app.constants import ExtensionKind
from app.exceptions import (
    DivisionByZero,
    FieldMismatch,
    InvalidTower,
    NotAField,
    NotInBaseField,
    PreconditionViolated,
    UnsupportedShape,
)
from app.logging.logging_config import logger
from app.tower.classes import ClassVector, basis_class, class_representative, kummer_class
from app.tower.element import FieldElement, constant, monomial, mul, nth_root, one, series, zero
from app.tower.field import TowerField
from app.tower.precision import TrackedElement, track, tracked_mul, trimmed
from app.tower.subgroup import Subgroup, span
from app.utils import ell_valuation


@dataclass(frozen=True)
class CyclicExtension:
    """A cyclic extension L/F of ell-power degree.

    ``generator`` satisfies generator^degree = radicand when a Kummer generator exists. For a Kummer extension
    ``gamma`` holds the exponents of gamma with P^degree = gamma * x_level; for an unramified one
    ``embedding_log`` is the logarithm in GF(q^f) of the image of the generator of GF(q).
    """

    base: TowerField
    tower: TowerField
    kind: ExtensionKind
    degree: int
    level: int
    radicand: FieldElement | None = None
    generator: FieldElement | None = None
    gamma: tuple[int, ...] = ()
    embedding_log: int = 1

    @property
    def ramification_index(self) -> int:
        """e(L/F)."""
        return self.degree if self.kind == ExtensionKind.KUMMER else 1

    @property
    def residue_degree(self) -> int:
        """f(L/F)."""
        return self.degree if self.kind == ExtensionKind.UNRAMIFIED else 1

    @property
    def character_class(self) -> ClassVector | None:
        """Class a with {a, -} the cup product by the Kummer character of L, when a radicand is known."""
        if self.radicand is None:
            return None
        return (self.base.modulus // self.degree) * kummer_class(self.radicand)

    def describe(self) -> dict[str, object]:
        """Summary for logs and JSON output."""
        return {
            'kind': str(self.kind),
            'degree': self.degree,
            'e': self.ramification_index,
            'f': self.residue_degree,
            'level': self.level,
            'tower': repr(self.tower),
        }


def _ell_exponent(base: TowerField, degree: int) -> int:
    if degree < 1 or degree != base.ell ** ell_valuation(degree, base.ell):
        raise UnsupportedShape(f'degree {degree} is not a power of {base.ell}')
    return ell_valuation(degree, base.ell)


def _unramified(base: TowerField, degree: int, radicand: FieldElement | None) -> CyclicExtension:
    try:
        tower = base.with_constants(base.q**degree)
    except InvalidTower as error:
        raise UnsupportedShape(f'GF({base.q}^{degree}) is beyond the supported field size') from error
    embedding_log = base.constants.embedding_log(tower.constants)
    extension = CyclicExtension(base, tower, ExtensionKind.UNRAMIFIED, degree, 0, embedding_log=embedding_log)
    if radicand is None:
        return extension
    # radicand = zeta^a * w^degree with a prime to ell
    power_of_zeta = kummer_class(radicand).exponents[0]
    zeta_part = monomial(base, (power_of_zeta,) + (0,) * base.depth)
    root = nth_root(mul(radicand, _inverse(zeta_part)), degree)
    zeta_root = constant(tower, tower.constants.exp(embedding_log * power_of_zeta // degree))
    generator = mul(zeta_root, embed(extension, root))
    return replace(extension, radicand=radicand, generator=generator)


def _inverse(element: FieldElement) -> FieldElement:
    return one(element.field) / element


def make_unramified(base: TowerField, degree: int) -> CyclicExtension:
    """The unramified extension of the given ell-power degree.

    When the degree divides ell^n the extension is also presented as F(zeta^(1/degree)).

    Raises:
        UnsupportedShape: Degree not an ell-power, or GF(q^degree) too large.
    """
    _ell_exponent(base, degree)
    radicand = None
    if base.modulus % degree == 0 and degree > 1:
        radicand = monomial(base, (1,) + (0,) * base.depth)
    extension = _unramified(base, degree, radicand)
    logger.debug('Built unramified extension of degree {} over {}', degree, base)
    return extension


def make_kummer(base: TowerField, radicand: FieldElement, exponent: int) -> CyclicExtension:
    """The Kummer extension F(radicand^(1/ell^exponent)).

    Args:
        base: The field F.
        radicand: Nonzero element b of F.
        exponent: m with 1 <= m <= n.

    Returns:
        The extension, unramified when b is a unit times an ell^m-th power.

    Raises:
        FieldMismatch: If b is not an element of F.
        DivisionByZero: If b is zero.
        PreconditionViolated: If m is outside 1..n.
        NotAField: If b is an ell-th power.
        UnsupportedShape: If b has no supported shape.
    """
    if radicand.field != base:
        raise FieldMismatch(f'{radicand.field} is not {base}')
    if radicand.is_zero:
        raise DivisionByZero('Kummer radicand is zero')
    if not 1 <= exponent <= base.n:
        raise PreconditionViolated(f'Kummer exponent {exponent} is outside 1..{base.n}')
    degree = base.ell**exponent
    values = tuple(value % degree for value in kummer_class(radicand).exponents)
    if all(value % base.ell == 0 for value in values):
        raise NotAField(f'radicand with class {values} is an {base.ell}-th power')
    level = max(index for index, value in enumerate(values) if value % base.ell)
    if any(values[level + 1 :]):
        raise UnsupportedShape(f'radicand with class {values} mixes ramification at several levels')
    if level == 0:
        extension = _unramified(base, degree, radicand)
    else:
        extension = _kummer(base, radicand, degree, values, level)
    logger.debug('Built {} extension of degree {} over {}', extension.kind, degree, base)
    return extension


def _kummer(
    base: TowerField, radicand: FieldElement, degree: int, values: tuple[int, ...], level: int
) -> CyclicExtension:
    valuation = values[level]
    inverse = pow(valuation, -1, degree)
    cofactor = (1 - valuation * inverse) // degree
    gamma = tuple((inverse * value) % degree for value in values[:level])
    correction = tuple(-((inverse * value) // degree) for value in values[:level])
    name = f'{base.level_names[level - 1]}_r{degree}'
    tower = base.with_level(level, base.precisions[level - 1] * degree, name)
    extension = CyclicExtension(base, tower, ExtensionKind.KUMMER, degree, level, radicand=radicand, gamma=gamma)

    # T0 = P^s * c^cofactor * M^-s satisfies T0^degree = c * x_level^s
    leading = [cofactor * values[index] - valuation * correction[index] for index in range(level)]
    leading += [valuation] + [0] * (base.depth - level)
    monomial_part = monomial(base, values[: level + 1] + (0,) * (base.depth - level))
    root = nth_root(mul(radicand, _inverse(monomial_part)), degree)
    generator = mul(monomial(tower, leading), embed(extension, root))
    return replace(extension, generator=generator)


def embed(extension: CyclicExtension, element: FieldElement) -> FieldElement:
    """Image of a base element in the standardized tower.

    Raises:
        FieldMismatch: If the element is not in the base field.
    """
    if element.field != extension.base:
        raise FieldMismatch(f'{element.field} is not the base of the extension')
    if extension.kind == ExtensionKind.UNRAMIFIED:
        return _embed_scalars(element, extension.tower, extension.embedding_log)
    return _embed_kummer(element, extension.tower, extension)


def _embed_scalars(element: FieldElement, target: TowerField, embedding_log: int) -> FieldElement:
    if element.is_zero:
        return zero(target)
    if target.depth == 0:
        value = target.constants.exp(embedding_log * element.field.constants.log(element.unit[0]))
        return FieldElement(target, 0, (value,))
    lower = target.residue_field()
    mapped = tuple(_embed_scalars(coefficient, lower, embedding_log) for coefficient in element.unit)
    return FieldElement(target, element.valuation, mapped)


def _embed_kummer(element: FieldElement, target: TowerField, extension: CyclicExtension) -> FieldElement:
    if element.is_zero:
        return zero(target)
    lower = target.residue_field()
    if target.depth > extension.level:
        mapped = tuple(_embed_kummer(coefficient, lower, extension) for coefficient in element.unit)
        return FieldElement(target, element.valuation, mapped)
    # x_level = gamma^-1 * P^degree
    degree = extension.degree
    coefficients = [zero(lower)] * (degree * len(element.unit))
    for index, coefficient in enumerate(element.unit):
        if not coefficient.is_zero:
            exponent = element.valuation + index
            gamma_power = monomial(lower, [-exponent * value for value in extension.gamma])
            coefficients[degree * index] = mul(coefficient, gamma_power)
    return FieldElement(target, degree * element.valuation, tuple(coefficients))


def galois_action(extension: CyclicExtension, element: FieldElement, times: int = 1) -> FieldElement:
    """Apply the fixed generator of Gal(L/F) ``times`` times.

    Unramified: Frobenius x -> x^q on constants. Kummer: P -> omega * P with omega = zeta^((q - 1)/degree).
    """
    if element.field != extension.tower:
        raise FieldMismatch(f'{element.field} is not the extension field')
    if extension.kind == ExtensionKind.UNRAMIFIED:
        return _frobenius(element, pow(extension.base.q, times, element.field.q - 1))
    omega_log = (extension.base.q - 1) // extension.degree * times
    return _twist(element, extension, omega_log)


def _frobenius(element: FieldElement, factor: int) -> FieldElement:
    if element.is_zero:
        return element
    field = element.field
    if field.depth == 0:
        return FieldElement(field, 0, (field.constants.exp(factor * field.constants.log(element.unit[0])),))
    return FieldElement(field, element.valuation, tuple(_frobenius(c, factor) for c in element.unit))


def _twist(element: FieldElement, extension: CyclicExtension, omega_log: int) -> FieldElement:
    if element.is_zero:
        return element
    field = element.field
    if field.depth > extension.level:
        mapped = tuple(_twist(coefficient, extension, omega_log) for coefficient in element.unit)
        return FieldElement(field, element.valuation, mapped)
    lower = field.residue_field()
    twisted = tuple(
        mul(coefficient, constant(lower, field.constants.exp(omega_log * (element.valuation + index))))
        for index, coefficient in enumerate(element.unit)
    )
    return FieldElement(field, element.valuation, twisted)


def pullback(extension: CyclicExtension, element: FieldElement) -> FieldElement:
    """Preimage in F of an element of L fixed by the Galois group.

    Raises:
        NotInBaseField: If the element visibly does not descend.
    """
    if element.field != extension.tower:
        raise FieldMismatch(f'{element.field} is not the extension field')
    if extension.kind == ExtensionKind.UNRAMIFIED:
        return _descend_scalars(element, extension.base, extension)
    return _descend_kummer(track(element), extension.base, extension)


def _descend_scalars(element: FieldElement, target: TowerField, extension: CyclicExtension) -> FieldElement:
    if element.is_zero:
        return zero(target)
    if target.depth == 0:
        source = element.field.constants
        index = (source.order - 1) // (target.q - 1)
        log_value = source.log(element.unit[0])
        if log_value % index:
            raise NotInBaseField(f'constant {element.unit[0]} of GF({source.order}) is not in GF({target.q})')
        scale = pow(extension.embedding_log // index, -1, target.q - 1)
        return FieldElement(target, 0, (target.constants.exp(log_value // index * scale),))
    lower = target.residue_field()
    mapped = tuple(_descend_scalars(coefficient, lower, extension) for coefficient in element.unit)
    return FieldElement(target, element.valuation, mapped)


def _descend_kummer(element: TrackedElement, target: TowerField, extension: CyclicExtension) -> FieldElement:
    value = element.value
    if value.is_zero:
        return zero(target)
    lower = target.residue_field()
    if target.depth > extension.level:
        mapped = [
            _descend_kummer(part, lower, extension) if value.valuation + index < element.cap else zero(lower)
            for index, part in enumerate(element.parts)
        ]
        return series(target, value.valuation, mapped)
    digits = _kummer_digits(element, lower, extension)
    if not digits:
        return zero(target)
    start = min(digits)
    return series(target, start, [digits.get(index, zero(lower)) for index in range(start, max(digits) + 1)])


def _kummer_digits(
    element: TrackedElement, lower: TowerField, extension: CyclicExtension
) -> dict[int, FieldElement]:
    # P^(degree j) = (gamma x_level)^j; other powers of P must carry zero within the known precision
    degree = extension.degree
    digits: dict[int, FieldElement] = {}
    for index, part in enumerate(element.parts):
        exponent = element.value.valuation + index
        if exponent >= element.cap:
            break
        digit = trimmed(part)
        if exponent % degree:
            if not digit.is_zero:
                name = extension.tower.level_names[extension.level - 1]
                raise NotInBaseField(f'coefficient of {name}^{exponent} is not zero')
            continue
        gamma_power = monomial(lower, [exponent // degree * entry for entry in extension.gamma])
        digits[exponent // degree] = mul(digit, gamma_power)
    return digits


def norm(extension: CyclicExtension, element: FieldElement) -> FieldElement:
    """N_{L/F}(z) as the product of the Galois conjugates, pulled back to F.

    Digits of the product past the precision its factors determine are dropped before the descent.

    Raises:
        DivisionByZero: For zero.
    """
    if element.is_zero:
        raise DivisionByZero('norm of zero')
    product = track(element)
    for times in range(1, extension.degree):
        product = tracked_mul(product, track(galois_action(extension, element, times)))
    if extension.kind == ExtensionKind.UNRAMIFIED:
        return _descend_scalars(trimmed(product), extension.base, extension)
    return _descend_kummer(product, extension.base, extension)


@cache
def restriction_images(extension: CyclicExtension) -> tuple[ClassVector, ...]:
    """Classes in L of the basis monomials zeta, x1, ..., xd of F."""
    base = extension.base
    representatives = (class_representative(basis_class(base, index)) for index in range(base.rank))
    return tuple(kummer_class(embed(extension, element)) for element in representatives)


@cache
def norm_images(extension: CyclicExtension) -> tuple[ClassVector, ...]:
    """Classes in F of the norms of the basis monomials of the standardized tower."""
    tower = extension.tower
    representatives = (class_representative(basis_class(tower, index)) for index in range(tower.rank))
    return tuple(kummer_class(norm(extension, element)) for element in representatives)


def _apply(images: tuple[ClassVector, ...], vector: ClassVector) -> ClassVector:
    result = 0 * images[0]
    for value, image in zip(vector.exponents, images, strict=True):
        result = result + value * image
    return result


def restrict_class(extension: CyclicExtension, vector: ClassVector) -> ClassVector:
    """Image of a class of F in L."""
    if vector.field != extension.base:
        raise FieldMismatch(f'{vector.field} is not the base of the extension')
    return _apply(restriction_images(extension), vector)


def norm_class(extension: CyclicExtension, vector: ClassVector) -> ClassVector:
    """Class of the norm of any element of L with the given class."""
    if vector.field != extension.tower:
        raise FieldMismatch(f'{vector.field} is not the extension field')
    return _apply(norm_images(extension), vector)


@cache
def norm_class_group(extension: CyclicExtension) -> Subgroup:
    """Image of N_{L/F} in F*/F*^(ell^n)."""
    return span(extension.base, norm_images(extension))


@cache
def _restricted_basis_symbol(extension: CyclicExtension, degree: int, key: tuple[int, ...]) -> CohClass:
    images = restriction_images(extension)
    return symbol([images[slot] for slot in slots(key, degree)])


def restrict(cohomology_class: CohClass, extension: CyclicExtension) -> CohClass:
    """Restriction of a class of F to L.

    Raises:
        FieldMismatch: If the class is not over the base field.
    """
    if cohomology_class.field != extension.base:
        raise FieldMismatch(f'{cohomology_class.field} is not the base of the extension')
    result = CohClass(extension.tower, cohomology_class.degree)
    for key, value in cohomology_class.coefficients:
        result = result + value * _restricted_basis_symbol(extension, cohomology_class.degree, key)
    return result


@cache
def restriction_matrix(extension: CyclicExtension, degree: int) -> np.ndarray:
    """Matrix of restriction on dense coefficient vectors of degree-m classes."""
    keys = basis_keys(extension.base.depth, degree)
    columns = [_restricted_basis_symbol(extension, degree, key).vector() for key in keys]
    rows = len(basis_keys(extension.tower.depth, degree))
    return np.array(columns, dtype=np.int64).T.reshape(rows, len(keys))


def splits(alpha: CohClass, extension: CyclicExtension) -> bool:
    """Whether alpha restricts to zero in L."""
    if alpha.field != extension.base:
        raise FieldMismatch(f'{alpha.field} is not the base of the extension')
    image = restriction_matrix(extension, alpha.degree) @ np.array(alpha.vector(), dtype=np.int64)
    return not np.any(image % extension.base.modulus)


def cyclic_generators(base: TowerField, degree: int) -> list[ClassVector]:
    """One generator per cyclic subgroup of order ``degree`` in the class group mod ``degree``.

    The generator is the lexicographically least vector among the unit multiples, entries in [0, degree).
    """
    units = [unit for unit in range(1, degree) if unit % base.ell]
    found = []
    for values in itertools.product(range(degree), repeat=base.rank):
        if all(value % base.ell == 0 for value in values):
            continue
        if all(tuple((unit * value) % degree for value in values) >= values for unit in units):
            found.append(ClassVector(base, values))
    return found
