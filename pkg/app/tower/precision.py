"""Absolute precision of truncated arithmetic.

Elements keep a fixed number of coefficients from their leading term. When the leading terms of a sum cancel, the
coefficients shifted into the window were never computed, so a result can carry digits past what its inputs
determine. A ``TrackedElement`` carries, for every level, the exponent below which its digits are known.
"""

import math
from dataclasses import dataclass

from app.tower.element import FieldElement, add, mul, series, zero
from app.tower.field import TowerField


@dataclass(frozen=True)
class TrackedElement:
    """An element together with the precision of its digits.

    Digits at exponents below ``cap`` of the top variable are known, each up to the caps of ``parts``. An
    infinite cap marks exact data, e.g. padding zeros or constants.
    """

    value: FieldElement
    cap: float = math.inf
    parts: tuple['TrackedElement', ...] = ()

    @property
    def floor(self) -> float:
        """Lowest exponent that may carry a nonzero digit."""
        return self.cap if self.value.is_zero else self.value.valuation

    @property
    def is_exact_zero(self) -> bool:
        """Zero with no uncertainty."""
        return self.value.is_zero and self.cap == math.inf


def _exact_zero(field: TowerField) -> TrackedElement:
    return TrackedElement(zero(field))


def track(element: FieldElement) -> TrackedElement:
    """Wrap an element whose stored coefficients are all known."""
    field = element.field
    if field.depth == 0 or element.is_zero:
        return TrackedElement(element)
    parts = tuple(track(coefficient) for coefficient in element.unit)
    return TrackedElement(element, element.valuation + field.precision, parts)


def _part(element: TrackedElement, exponent: int) -> TrackedElement:
    if not element.value.is_zero:
        index = exponent - element.value.valuation
        if 0 <= index < len(element.parts):
            return element.parts[index]
    return _exact_zero(element.value.field.residue_field())


def _normalized(field: TowerField, low: int, parts: list[TrackedElement], cap: float) -> TrackedElement:
    leading = next((index for index, part in enumerate(parts) if not part.value.is_zero), None)
    if leading is None:
        return TrackedElement(zero(field), cap)
    kept = parts[leading : leading + field.precision]
    kept += [_exact_zero(field.residue_field())] * (field.precision - len(kept))
    value = FieldElement(field, low + leading, tuple(part.value for part in kept))
    return TrackedElement(value, cap, tuple(kept))


def tracked_add(a: TrackedElement, b: TrackedElement) -> TrackedElement:
    """Sum, known up to the smaller of the two caps."""
    if a.is_exact_zero:
        return b
    if b.is_exact_zero:
        return a
    field = a.value.field
    if field.depth == 0:
        return TrackedElement(add(a.value, b.value))
    cap = min(a.cap, b.cap)
    valuations = [term.value.valuation for term in (a, b) if not term.value.is_zero]
    if not valuations:
        return TrackedElement(zero(field), cap)
    low = min(valuations)
    parts = [tracked_add(_part(a, low + index), _part(b, low + index)) for index in range(field.precision)]
    return _normalized(field, low, parts, cap)


def tracked_mul(a: TrackedElement, b: TrackedElement) -> TrackedElement:
    """Product, known up to min(cap(a) + v(b), cap(b) + v(a))."""
    field = a.value.field
    if field.depth == 0:
        return TrackedElement(mul(a.value, b.value))
    cap = min(a.cap + b.floor, b.cap + a.floor)
    if a.value.is_zero or b.value.is_zero:
        return TrackedElement(zero(field), cap)
    parts = []
    for degree in range(field.precision):
        total = _exact_zero(field.residue_field())
        for index in range(degree + 1):
            total = tracked_add(total, tracked_mul(a.parts[index], b.parts[degree - index]))
        parts.append(total)
    return _normalized(field, a.value.valuation + b.value.valuation, parts, cap)


def trimmed(element: TrackedElement) -> FieldElement:
    """The value with every digit outside the known precision set to zero."""
    value = element.value
    field = value.field
    if field.depth == 0 or value.is_zero:
        return value
    blank = zero(field.residue_field())
    coefficients = [
        trimmed(part) if value.valuation + index < element.cap else blank for index, part in enumerate(element.parts)
    ]
    return series(field, value.valuation, coefficients)
