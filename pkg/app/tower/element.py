"""Exact truncated arithmetic in tower fields.

An element of F = k((x_d)) is stored as x_d^v * (a_0 + a_1 x_d + ... + a_{N-1} x_d^{N-1}) with a_0 != 0 and the
a_i elements of the residue tower k. Over GF(q) the unit is a one-tuple holding the integer representation of the
value. Zero has an empty unit.
"""

from collections.abc import Sequence
from dataclasses import dataclass
from typing import Any

from app.exceptions import DepthZero, DivisionByZero, FieldMismatch, NotAPower, NotAUnit
from app.tower.field import TowerField


@dataclass(frozen=True)
class FieldElement:
    """An element of a tower field.

    ``unit`` holds ints at depth 0 and FieldElements of ``field.residue_field()`` above.
    """

    field: TowerField
    valuation: int
    unit: tuple[Any, ...]

    @property
    def is_zero(self) -> bool:
        """Whether this is the zero element."""
        return not self.unit

    def __add__(self, other: 'FieldElement') -> 'FieldElement':
        """Sum."""
        return add(self, other)

    def __sub__(self, other: 'FieldElement') -> 'FieldElement':
        """Difference."""
        return add(self, neg(other))

    def __neg__(self) -> 'FieldElement':
        """Additive inverse."""
        return neg(self)

    def __mul__(self, other: 'FieldElement') -> 'FieldElement':
        """Product."""
        return mul(self, other)

    def __truediv__(self, other: 'FieldElement') -> 'FieldElement':
        """Quotient."""
        return mul(self, inverse(other))

    def __pow__(self, exponent: int) -> 'FieldElement':
        """Integer power."""
        return power(self, exponent)


def zero(field: TowerField) -> FieldElement:
    """The zero element of ``field``."""
    return FieldElement(field, 0, ())


def constant(field: TowerField, value: int) -> FieldElement:
    """The constant ``value`` of GF(q), given in integer representation."""
    if value == 0:
        return zero(field)
    if field.depth == 0:
        return FieldElement(field, 0, (value,))
    return lift(field, constant(field.residue_field(), value))


def one(field: TowerField) -> FieldElement:
    """The unit element."""
    return constant(field, 1)


def from_integer(field: TowerField, value: int) -> FieldElement:
    """Image of an integer in the field."""
    return constant(field, field.constants.from_integer(value))


def lift(field: TowerField, residue: FieldElement) -> FieldElement:
    """Embed an element of the residue tower as a constant series in the top variable.

    Raises:
        FieldMismatch: If ``residue`` is not an element of ``field.residue_field()``.
    """
    if residue.field != field.residue_field():
        raise FieldMismatch(f'{residue.field} is not the residue field of {field}')
    if residue.is_zero:
        return zero(field)
    padding = (zero(residue.field),) * (field.precision - 1)
    return FieldElement(field, 0, (residue, *padding))


def variable(field: TowerField, level: int) -> FieldElement:
    """The uniformizer x_level (1-based)."""
    return monomial(field, tuple(1 if index == level else 0 for index in range(field.rank)))


def monomial(field: TowerField, exponents: Sequence[int]) -> FieldElement:
    """zeta^e0 * x1^e1 * ... * xd^ed for arbitrary integer exponents.

    Args:
        field: Target tower.
        exponents: One exponent per class-vector coordinate, zeta first.

    Returns:
        The monomial.

    Raises:
        FieldMismatch: If the exponent vector has the wrong length.
    """
    if len(exponents) != field.rank:
        raise FieldMismatch(f'{len(exponents)} exponents given for a rank {field.rank} tower')
    if field.depth == 0:
        return FieldElement(field, 0, (field.constants.exp(exponents[0]),))
    residue_part = monomial(field.residue_field(), exponents[:-1])
    padding = (zero(residue_part.field),) * (field.precision - 1)
    return FieldElement(field, exponents[-1], (residue_part, *padding))


def series(field: TowerField, valuation: int, coefficients: Sequence[Any]) -> FieldElement:
    """Build sum(c_i * x_d^(valuation + i)), normalized and truncated to the field precision.

    Args:
        field: A tower of depth >= 1.
        valuation: Exponent of the first coefficient.
        coefficients: Elements of the residue tower.

    Returns:
        The element.

    Raises:
        DepthZero: Over a finite field.
    """
    if field.depth == 0:
        raise DepthZero('series need a Laurent-series level')
    blank = zero(field.residue_field())
    leading = next((index for index, coefficient in enumerate(coefficients) if not coefficient.is_zero), None)
    if leading is None:
        return zero(field)
    kept = list(coefficients[leading : leading + field.precision])
    kept += [blank] * (field.precision - len(kept))
    return FieldElement(field, valuation + leading, tuple(kept))


def _check_same_field(a: FieldElement, b: FieldElement) -> None:
    if a.field != b.field:
        raise FieldMismatch(f'{a.field} and {b.field} differ')


def _coefficient(a: FieldElement, exponent: int, blank: FieldElement) -> FieldElement:
    index = exponent - a.valuation
    if 0 <= index < len(a.unit):
        return a.unit[index]  # type: ignore[no-any-return]
    return blank


def add(a: FieldElement, b: FieldElement) -> FieldElement:
    """Sum of two elements of the same field."""
    _check_same_field(a, b)
    if a.is_zero:
        return b
    if b.is_zero:
        return a
    field = a.field
    if field.depth == 0:
        return constant(field, field.constants.add(a.unit[0], b.unit[0]))
    blank = zero(field.residue_field())
    low = min(a.valuation, b.valuation)
    coefficients = [
        add(_coefficient(a, low + index, blank), _coefficient(b, low + index, blank))
        for index in range(field.precision)
    ]
    return series(field, low, coefficients)


def neg(a: FieldElement) -> FieldElement:
    """Additive inverse."""
    if a.is_zero:
        return a
    if a.field.depth == 0:
        return FieldElement(a.field, 0, (a.field.constants.neg(a.unit[0]),))
    return FieldElement(a.field, a.valuation, tuple(neg(coefficient) for coefficient in a.unit))


def mul(a: FieldElement, b: FieldElement) -> FieldElement:
    """Product, truncated to the field precision."""
    _check_same_field(a, b)
    if a.is_zero or b.is_zero:
        return zero(a.field)
    field = a.field
    if field.depth == 0:
        return FieldElement(field, 0, (field.constants.mul(a.unit[0], b.unit[0]),))
    blank = zero(field.residue_field())
    coefficients = []
    for degree in range(field.precision):
        total = blank
        for index in range(degree + 1):
            total = add(total, mul(a.unit[index], b.unit[degree - index]))
        coefficients.append(total)
    return series(field, a.valuation + b.valuation, coefficients)


def inverse(a: FieldElement) -> FieldElement:
    """Multiplicative inverse by power-series inversion of the unit part.

    Raises:
        DivisionByZero: For zero.
    """
    if a.is_zero:
        raise DivisionByZero(f'inverse of zero in {a.field}')
    field = a.field
    if field.depth == 0:
        return FieldElement(field, 0, (field.constants.inv(a.unit[0]),))
    leading_inverse = inverse(a.unit[0])
    coefficients = [leading_inverse]
    for degree in range(1, field.precision):
        total = zero(field.residue_field())
        for index in range(1, degree + 1):
            total = add(total, mul(a.unit[index], coefficients[degree - index]))
        coefficients.append(neg(mul(leading_inverse, total)))
    return series(field, -a.valuation, coefficients)


def power(a: FieldElement, exponent: int) -> FieldElement:
    """Integer power by repeated squaring; negative exponents invert first."""
    if exponent < 0:
        return power(inverse(a), -exponent)
    result = one(a.field)
    base = a
    while exponent:
        if exponent & 1:
            result = mul(result, base)
        exponent >>= 1
        if exponent:
            base = mul(base, base)
    return result


def valuation_split(lam: FieldElement) -> tuple[int, FieldElement]:
    """Split lam = theta * x_d^r with theta a unit.

    Returns:
        (r, theta)

    Raises:
        DivisionByZero: For zero.
    """
    if lam.is_zero:
        raise DivisionByZero('valuation of zero')
    if lam.field.depth == 0:
        return 0, lam
    return lam.valuation, FieldElement(lam.field, 0, lam.unit)


def residue(u: FieldElement) -> FieldElement:
    """Image of a unit in the residue tower.

    Raises:
        DepthZero: Over a finite field.
        NotAUnit: If u has nonzero valuation or is zero.
    """
    if u.field.depth == 0:
        raise DepthZero('residue map over a finite field')
    if u.is_zero or u.valuation != 0:
        raise NotAUnit(f'element of valuation {u.valuation} has no residue')
    return u.unit[0]  # type: ignore[no-any-return]


def nth_root(lam: FieldElement, exponent: int) -> FieldElement:
    """An exponent-th root of lam.

    The root of the residue comes first, then Newton iteration on the remaining one-unit, then the uniformizer power.

    Args:
        lam: Element that is an exponent-th power.
        exponent: Positive integer prime to the characteristic.

    Returns:
        rho with rho^exponent = lam up to the field precision.

    Raises:
        NotAPower: If lam has no such root.
    """
    if lam.is_zero:
        return lam
    field = lam.field
    if field.depth == 0:
        return FieldElement(field, 0, (field.constants.root(lam.unit[0], exponent),))
    valuation, unit = valuation_split(lam)
    if valuation % exponent:
        raise NotAPower(f'valuation {valuation} is not divisible by {exponent}')
    residue_root = lift(field, nth_root(residue(unit), exponent))
    one_unit = mul(unit, inverse(power(residue_root, exponent)))
    uniformizer_part = power(variable(field, field.depth), valuation // exponent)
    return mul(mul(residue_root, _one_unit_root(one_unit, exponent)), uniformizer_part)


def _one_unit_root(w: FieldElement, exponent: int) -> FieldElement:
    field = w.field
    if w == one(field):
        return w
    if exponent % field.p == 0:
        raise NotAPower(f'{exponent}-th roots of one-units need exponent prime to {field.p}')
    scale = from_integer(field, exponent)
    root = one(field)
    for _ in range(field.precision.bit_length() + 1):
        partial = power(root, exponent - 1)
        step = mul(add(mul(partial, root), neg(w)), inverse(mul(scale, partial)))
        root = add(root, neg(step))
    return root
