"""Small helpers shared across the package."""

import json
from typing import Any

import numpy as np


def canonical_json(payload: Any) -> str:
    """Serialize with sorted keys so equal payloads print byte-identically.

    Args:
        payload: JSON-compatible object.

    Returns:
        The JSON text.
    """
    return json.dumps(payload, sort_keys=True)


def ell_valuation(value: int, ell: int) -> int:
    """Exponent of ell in a nonzero integer.

    Args:
        value: Nonzero integer.
        ell: Prime.

    Returns:
        The largest e with ell**e dividing value.

    Raises:
        ValueError: For zero.
    """
    if value == 0:
        raise ValueError('ell-adic valuation of zero')
    exponent = 0
    while value % ell == 0:
        value //= ell
        exponent += 1
    return exponent


def make_rng(seed: int, *stream: int) -> np.random.Generator:
    """Seeded generator used by every randomized check; ``stream`` separates independent chunks of one run."""
    return np.random.default_rng([seed, *stream])
