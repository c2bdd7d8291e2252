"""Test module for app/cohomology/keys.py."""

import pytest

from app.cohomology.keys import basis_keys, cohomology_rank


def test_basis_keys() -> None:
    """Zeta keys first, then pure symbols."""
    assert basis_keys(2, 2) == ((1,), (2,), (1, 2))
    assert basis_keys(2, 3) == ((1, 2),)
    assert cohomology_rank(3, 2) == 6
    assert cohomology_rank(0, 2) == 0


@pytest.mark.parametrize(('depth', 'rank'), [(0, 0), (1, 0), (2, 1), (3, 4)])
def test_degree_three_rank(depth: int, rank: int) -> None:
    """H^3 has C(d, 2) + C(d, 3) basis symbols."""
    assert len(basis_keys(depth, 3)) == cohomology_rank(depth, 3) == rank
