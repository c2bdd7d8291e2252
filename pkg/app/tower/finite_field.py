"""Finite fields GF(q) as exponent/logarithm tables.

Elements are plain ints in the integer representation used by ``galois`` (for q = p^k an element is the
base-p packing of its polynomial coefficients over the Conway polynomial). Arithmetic goes through a
discrete-logarithm table with respect to ``GF.primitive_element`` and a Zech logarithm table for addition.
"""

from functools import cache
from math import gcd

import galois
import numpy as np

from app.constants import MAX_FIELD_ORDER
from app.exceptions import DivisionByZero, InvalidTower, NotAPower
from app.logging.logging_config import logger


class FiniteField:
    """GF(q) with table-driven arithmetic on integer-represented elements."""

    def __init__(self, order: int) -> None:
        """Build the tables for GF(order).

        Args:
            order: A prime power no larger than MAX_FIELD_ORDER.

        Raises:
            InvalidTower: If order is not a prime power or exceeds the supported size.
        """
        if order > MAX_FIELD_ORDER or not galois.is_prime_power(order):
            raise InvalidTower(f'GF({order}) is not a supported finite field')

        self.galois_field = galois.GF(order)
        self.order = order
        self.characteristic = int(self.galois_field.characteristic)
        self.degree = int(self.galois_field.degree)
        self.generator = int(self.galois_field.primitive_element)

        exponents = np.arange(order - 1)
        powers = self.galois_field(np.full(order - 1, self.generator)) ** exponents
        self._exp: list[int] = powers.view(np.ndarray).astype(int).tolist()
        self._log: list[int] = [-1] * order
        for index, value in enumerate(self._exp):
            self._log[value] = index
        successors = (powers + self.galois_field(1)).view(np.ndarray).astype(int).tolist()
        # zech[i] = log(1 + g^i), -1 where 1 + g^i = 0
        self._zech: list[int] = [self._log[value] if value else -1 for value in successors]
        logger.debug('Built GF({}) tables with generator {}', order, self.generator)

    def __repr__(self) -> str:
        """Short description used in logs."""
        return f'FiniteField({self.order})'

    @property
    def unit_order(self) -> int:
        """Order of the multiplicative group."""
        return self.order - 1

    def exp(self, exponent: int) -> int:
        """Return g^exponent for the fixed primitive element g."""
        return self._exp[exponent % (self.order - 1)]

    def log(self, value: int) -> int:
        """Discrete logarithm base g.

        Args:
            value: A nonzero element.

        Returns:
            The exponent in [0, q - 1).

        Raises:
            DivisionByZero: For the zero element.
        """
        if value == 0:
            raise DivisionByZero('log of zero in a finite field')
        return self._log[value]

    def add(self, a: int, b: int) -> int:
        """Sum of two elements."""
        if a == 0:
            return b
        if b == 0:
            return a
        log_a = self._log[a]
        zech = self._zech[(self._log[b] - log_a) % (self.order - 1)]
        if zech < 0:
            return 0
        return self._exp[(log_a + zech) % (self.order - 1)]

    def neg(self, a: int) -> int:
        """Additive inverse."""
        if a == 0 or self.characteristic == 2:
            return a
        return self._exp[(self._log[a] + (self.order - 1) // 2) % (self.order - 1)]

    def mul(self, a: int, b: int) -> int:
        """Product of two elements."""
        if a == 0 or b == 0:
            return 0
        return self._exp[(self._log[a] + self._log[b]) % (self.order - 1)]

    def inv(self, a: int) -> int:
        """Multiplicative inverse.

        Raises:
            DivisionByZero: For the zero element.
        """
        if a == 0:
            raise DivisionByZero('inverse of zero in a finite field')
        return self._exp[-self._log[a] % (self.order - 1)]

    def power(self, a: int, exponent: int) -> int:
        """Return a^exponent, negative exponents allowed for units."""
        if a == 0:
            if exponent <= 0:
                raise DivisionByZero('nonpositive power of zero')
            return 0
        return self._exp[(self._log[a] * exponent) % (self.order - 1)]

    def from_integer(self, value: int) -> int:
        """Image of an integer under Z -> GF(q)."""
        return value % self.characteristic

    def minus_one(self) -> int:
        """The element -1."""
        return self.neg(1)

    def is_power(self, a: int, exponent: int) -> bool:
        """Whether a nonzero element is an exponent-th power."""
        return self.log(a) % gcd(exponent, self.order - 1) == 0

    def root(self, a: int, exponent: int) -> int:
        """An exponent-th root of a, the one with the least logarithm.

        Args:
            a: Element to take the root of.
            exponent: Positive integer.

        Returns:
            r with r^exponent = a.

        Raises:
            NotAPower: If a has no such root in GF(q).
        """
        if a == 0:
            return 0
        common = gcd(exponent, self.order - 1)
        log_a = self.log(a)
        if log_a % common:
            raise NotAPower(f'{a} is not a {exponent}-th power in GF({self.order})')
        reduced_order = (self.order - 1) // common
        if reduced_order == 1:
            return 1
        step = pow(exponent // common, -1, reduced_order)
        return self._exp[((log_a // common) * step) % reduced_order]

    def embedding_log(self, target: 'FiniteField') -> int:
        """Logarithm in ``target`` of the image of the generator under a fixed embedding.

        The embedding sends g to the root of its minimal polynomial with the least logarithm in the larger field.

        Args:
            target: A finite field containing a copy of this one.

        Returns:
            k such that the embedding maps g^t to target.exp(k * t).

        Raises:
            InvalidTower: If the target does not contain this field.
        """
        if target.characteristic != self.characteristic or target.degree % self.degree:
            raise InvalidTower(f'GF({self.order}) does not embed in GF({target.order})')
        minimal = self.galois_field.primitive_element.minimal_poly()
        coefficients = minimal.coeffs.view(np.ndarray).astype(int).tolist()
        lifted = galois.Poly(coefficients, field=target.galois_field)
        roots = lifted.roots().view(np.ndarray).astype(int).tolist()
        return min(target.log(root) for root in roots)


@cache
def finite_field(order: int) -> FiniteField:
    """Shared GF(order) instance.

    Args:
        order: Prime power.

    Returns:
        The cached field.
    """
    return FiniteField(order)
