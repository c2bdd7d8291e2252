"""Parameters of a verification run."""

from dataclasses import dataclass, replace

from app.constants import DEFAULT_PRECISION, DEFAULT_SAMPLES, DEFAULT_SEED
from app.exceptions import ConfigError
from app.tower.field import TowerField, make_tower


@dataclass(frozen=True)
class SuiteScope:
    """Tower parameters plus the randomization controls shared by all suites."""

    q: int = 3
    ell: int = 2
    n: int = 1
    depth: int = 2
    precision: int = DEFAULT_PRECISION
    seed: int = DEFAULT_SEED
    samples: int = DEFAULT_SAMPLES

    def __post_init__(self) -> None:
        """Check the randomization controls.

        Raises:
            ConfigError: For a negative seed or a non-positive sample count.
        """
        if self.samples < 1:
            raise ConfigError(f'samples must be positive, got {self.samples}')
        if self.seed < 0:
            raise ConfigError(f'seed must be non-negative, got {self.seed}')

    def tower(self, depth: int | None = None) -> TowerField:
        """The tower of this scope, optionally at another depth.

        Raises:
            UsageError: If the tower parameters are invalid.
        """
        return make_tower(self.q, self.ell, self.n, self.depth if depth is None else depth, self.precision)

    def override(self, **changes: int | None) -> 'SuiteScope':
        """Copy with the given fields replaced; None values are ignored."""
        return replace(self, **{key: value for key, value in changes.items() if value is not None})
