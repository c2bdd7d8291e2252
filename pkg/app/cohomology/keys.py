"""Indexing of the symbol basis, independent of any field."""

import itertools
from functools import cache
from math import comb

Key = tuple[int, ...]


@cache
def basis_keys(depth: int, degree: int) -> tuple[Key, ...]:
    """Basis keys of degree-m classes over a depth-d tower, zeta-keys first, each block lexicographic."""
    with_zeta = itertools.combinations(range(1, depth + 1), degree - 1)
    pure = itertools.combinations(range(1, depth + 1), degree)
    return tuple(with_zeta) + tuple(pure)


def cohomology_rank(depth: int, degree: int) -> int:
    """Rank of the degree-m group over a depth-d tower."""
    return comb(depth, degree - 1) + comb(depth, degree)
