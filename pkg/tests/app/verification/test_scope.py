"""Test module for app/verification/scope.py."""

import pytest

from app.exceptions import ConfigError, RootsOfUnityMissing
from app.verification.scope import SuiteScope


def test_defaults_build_the_two_local_field() -> None:
    """GF(3)((x1))((x2)) with coefficients mod 2."""
    field = SuiteScope().tower()
    assert (field.q, field.ell, field.n, field.depth) == (3, 2, 1, 2)
    assert SuiteScope().tower(depth=1).depth == 1


def test_override_ignores_none() -> None:
    """Unset flags keep the suite's values."""
    scope = SuiteScope(q=5, n=2).override(q=None, depth=1, samples=10)
    assert (scope.q, scope.n, scope.depth, scope.samples) == (5, 2, 1, 10)


@pytest.mark.parametrize(('seed', 'samples'), [(-1, 10), (0, 0)])
def test_randomization_controls(seed: int, samples: int) -> None:
    """Seeds are non-negative and sample counts positive."""
    with pytest.raises(ConfigError):
        SuiteScope(seed=seed, samples=samples)


def test_invalid_tower() -> None:
    """Tower validation happens when the field is built."""
    with pytest.raises(RootsOfUnityMissing):
        SuiteScope(q=5, ell=3).tower()
