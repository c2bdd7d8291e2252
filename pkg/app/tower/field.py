"""Descriptors of towers F = GF(q)((x1))...((xd))."""

from dataclasses import dataclass, field
from functools import cache
from math import comb

import galois

from app.cohomology.keys import basis_keys
from app.constants import DEFAULT_LEVEL_NAMES, DEFAULT_PRECISION, MAX_DEPTH, MAX_FIELD_ORDER, ZETA_NAME
from app.exceptions import (
    BadCharacteristic,
    DepthUnsupported,
    DepthZero,
    InternalVerificationFailed,
    InvalidTower,
    RootsOfUnityMissing,
)
from app.logging.logging_config import logger
from app.tower.finite_field import FiniteField, finite_field


@dataclass(frozen=True)
class TowerField:
    """A tower of Laurent-series fields over GF(q) together with the coefficient level ell^n.

    ``precisions[i]`` is the number of stored coefficients of the series in the variable of level i + 1.
    """

    q: int
    ell: int
    n: int
    precisions: tuple[int, ...]
    level_names: tuple[str, ...]
    p: int = field(init=False, compare=False)

    def __post_init__(self) -> None:
        """Validate the tower parameters.

        Raises:
            InvalidTower: q not a prime power, ell not prime, n or a precision < 1, mismatched names.
            BadCharacteristic: ell divides q.
            RootsOfUnityMissing: ell^n does not divide q - 1.
            DepthUnsupported: More than MAX_DEPTH levels.
        """
        if self.q > MAX_FIELD_ORDER or not galois.is_prime_power(self.q):
            raise InvalidTower(f'q={self.q} is not a prime power up to {MAX_FIELD_ORDER}')
        if not galois.is_prime(self.ell):
            raise InvalidTower(f'ell={self.ell} is not prime')
        if self.n < 1:
            raise InvalidTower(f'n={self.n} must be positive')
        if self.q % self.ell == 0:
            raise BadCharacteristic(f'ell={self.ell} divides q={self.q}')
        if (self.q - 1) % self.ell**self.n:
            raise RootsOfUnityMissing(f'{self.ell}^{self.n} does not divide {self.q} - 1')
        if len(self.precisions) > MAX_DEPTH:
            raise DepthUnsupported(f'depth {len(self.precisions)} exceeds {MAX_DEPTH}')
        if any(precision < 1 for precision in self.precisions):
            raise InvalidTower(f'precisions {self.precisions} must be positive')
        if len(self.level_names) != len(self.precisions) or len(set(self.level_names)) != len(self.level_names):
            raise InvalidTower(f'level names {self.level_names} do not match the depth')
        object.__setattr__(self, 'p', int(galois.factors(self.q)[0][0]))

    def __repr__(self) -> str:
        """Readable form such as GF(3)((x1))((x2)) mod 2^1."""
        levels = ''.join(f'(({name}))' for name in self.level_names)
        return f'GF({self.q}){levels} mod {self.ell}^{self.n}'

    @property
    def depth(self) -> int:
        """Number of Laurent-series levels."""
        return len(self.precisions)

    @property
    def precision(self) -> int:
        """Coefficients stored at the top level (1 for a finite field)."""
        return self.precisions[-1] if self.precisions else 1

    @property
    def modulus(self) -> int:
        """ell^n."""
        return int(self.ell**self.n)

    @property
    def rank(self) -> int:
        """Rank of F*/F*^(ell^n) as a Z/ell^n module."""
        return self.depth + 1

    @property
    def basis_names(self) -> tuple[str, ...]:
        """Coordinate names of class vectors, zeta first."""
        return (ZETA_NAME, *self.level_names)

    @property
    def constants(self) -> FiniteField:
        """The base finite field GF(q)."""
        return finite_field(self.q)

    @property
    def zeta(self) -> int:
        """The fixed generator of GF(q)*."""
        return self.constants.generator

    def residue_field(self) -> 'TowerField':
        """The tower with the top level removed.

        Raises:
            DepthZero: For a finite field.
        """
        if self.depth == 0:
            raise DepthZero('a finite field has no residue field')
        return self.subtower(self.depth - 1)

    def subtower(self, depth: int) -> 'TowerField':
        """The first ``depth`` levels of this tower."""
        if depth == self.depth:
            return self
        return _subtower(self, depth)

    def with_level(self, level: int, precision: int, name: str) -> 'TowerField':
        """Same tower with level ``level`` (1-based) renamed and given a new precision."""
        precisions = list(self.precisions)
        names = list(self.level_names)
        precisions[level - 1] = precision
        names[level - 1] = name
        return TowerField(self.q, self.ell, self.n, tuple(precisions), tuple(names))

    def with_constants(self, order: int) -> 'TowerField':
        """Same levels over a larger constant field GF(order)."""
        return TowerField(order, self.ell, self.n, self.precisions, self.level_names)


def make_tower(
    q: int,
    ell: int,
    n: int,
    depth: int,
    precision: int = DEFAULT_PRECISION,
    level_names: tuple[str, ...] | None = None,
) -> TowerField:
    """Build and validate a tower descriptor.

    Args:
        q: Size of the base finite field.
        ell: The prime ell.
        n: Coefficient level, classes are taken mod ell^n.
        depth: Number of Laurent-series levels, 0 to 3.
        precision: Coefficients kept per level.
        level_names: Variable names, default x1, x2, x3.

    Returns:
        The tower.

    Raises:
        DepthUnsupported: If depth is outside 0..3.
        InternalVerificationFailed: If the degree 3 basis breaks the rank law.
    """
    if not 0 <= depth <= MAX_DEPTH:
        raise DepthUnsupported(f'depth {depth} is outside 0..{MAX_DEPTH}')
    names = level_names if level_names is not None else DEFAULT_LEVEL_NAMES[:depth]
    tower = TowerField(q, ell, n, (precision,) * depth, tuple(names))
    _check_rank_law(depth)
    logger.debug('Built tower {}', tower)
    return tower


def _check_rank_law(depth: int) -> None:
    # H^3(F)[ell^n] is free of rank C(d, 2) + C(d, 3) over Z/ell^n
    rank = len(basis_keys(depth, 3))
    if rank != comb(depth, 2) + comb(depth, 3):
        raise InternalVerificationFailed(f'degree 3 basis of rank {rank} over depth {depth}')

@cache
def _subtower(tower: TowerField, depth: int) -> TowerField:
    return TowerField(tower.q, tower.ell, tower.n, tower.precisions[:depth], tower.level_names[:depth])
