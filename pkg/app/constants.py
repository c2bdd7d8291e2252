"""Application Constants."""

import os
from enum import StrEnum

ENV = os.getenv('ENV', 'local')
DEPLOYMENT_ENVS = {'dev', 'perf', 'staging', 'prod'}

# Worker pool size for verify sweeps when --jobs is not given. Empty means machine parallelism.
ROSTLAB_JOBS = os.getenv('ROSTLAB_JOBS', '')
ROSTLAB_LOG_LEVEL = os.getenv('ROSTLAB_LOG_LEVEL', 'WARNING')

# Series truncation order per tower level. N = 1 already determines every class.
DEFAULT_PRECISION = int(os.getenv('ROSTLAB_PRECISION', 2))

# Desk-scale caps
MAX_FIELD_ORDER = 2**16
MAX_DEPTH = 3
MAX_DEGREE = 4

# Randomized suites
DEFAULT_SEED = 0
DEFAULT_SAMPLES = 10_000

JSON_SCHEMA_VERSION = 1

# Names of basis coordinates in printed output
ZETA_NAME = 'zeta'
DEFAULT_LEVEL_NAMES = ('x1', 'x2', 'x3')


class ExtensionKind(StrEnum):
    """Shapes of cyclic extensions that can be built."""

    UNRAMIFIED = 'unramified'
    KUMMER = 'kummer'


class Exactness(StrEnum):
    """How much a computed subgroup is known to be the true one."""

    EXACT = 'exact'
    LOWER_BOUND = 'lower_bound'


class ReportStatus(StrEnum):
    """Outcome of comparing a Rost kernel with a Suslin group."""

    VERIFIED = 'verified'
    COUNTEREXAMPLE = 'counterexample'
    INCONCLUSIVE = 'inconclusive'


class SuiteName(StrEnum):
    """Verification suites available to `rostlab verify`."""

    STEINBERG = 'steinberg'
    EXACT_SEQUENCE = 'exact-sequence'
    RESIDUE_FORMULAS = 'residue-formulas'
    ROST_DIV_L = 'rost-div-l'
    PERIOD_POWERS = 'period-powers'
    QUOTIENT_FORMULA = 'quotient-formula'
    INDUCTIVE_PAIRS = 'inductive-pairs'
    NORM_WITNESSES = 'norm-witnesses'
    ALBERT_FORMS = 'albert-forms'
    NORM_INTERSECTION = 'norm-intersection'
    DUAL_PATH = 'dual-path'

    @classmethod
    def resolve(cls, name: str) -> 'SuiteName':
        """Suite for a canonical name or one of its result-numbered aliases.

        Args:
            name: Name given on the command line.

        Returns:
            The suite.

        Raises:
            ValueError: If the name is unknown.
        """
        return SUITE_ALIASES.get(name) or cls(name)


# aliases named after the numbered results each suite checks
SUITE_ALIASES: dict[str, SuiteName] = {
    'thm-1-6': SuiteName.PERIOD_POWERS,
    'thm-4-9': SuiteName.QUOTIENT_FORMULA,
    'lemma-4-2': SuiteName.NORM_WITNESSES,
    'lemma-4-8': SuiteName.INDUCTIVE_PAIRS,
    'prop-2-1': SuiteName.ALBERT_FORMS,
    'cond-6-1-1': SuiteName.NORM_INTERSECTION,
}


class Command(StrEnum):
    """CLI subcommands."""

    FIELD = 'field'
    EVAL = 'eval'
    EXT = 'ext'
    ROST = 'rost'
    SUSLIN = 'suslin'
    REPORT = 'report'
    VERIFY = 'verify'
    ALBERT = 'albert'


class ExitCode:
    """Process exit codes of the CLI."""

    OK = 0
    COUNTEREXAMPLE = 1
    USAGE = 2
    INCONCLUSIVE = 3
