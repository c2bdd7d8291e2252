"""Command line entrypoint."""

import argparse
import sys
from collections.abc import Callable, Sequence
from pathlib import Path
from typing import Any

from app.albert.checks import check_albert_symbols
from app.albert.forms import anisotropic_dimension, discriminant_class, isotropic, witt_index
from app.cli.expressions import value_json
from app.cli.schemas import Envelope
from app.cli.session import Session, load_session
from app.cohomology.classes import CohClass
from app.constants import (
    DEFAULT_PRECISION,
    ROSTLAB_LOG_LEVEL,
    SUITE_ALIASES,
    Command,
    ExitCode,
    ExtensionKind,
    ReportStatus,
    SuiteName,
)
from app.exceptions import ComputationError, ConfigError, InternalVerificationFailed, ParseError, UsageError
from app.extensions.cyclic import make_kummer, make_unramified
from app.logging.logging_config import SERIALIZE, CustomizeLogger, logger, run_context
from app.rost.kernels import rost_kernel
from app.rost.report import quotient_report
from app.rost.suslin import nrd_class_group, suslin_group
from app.telemetry import configure_telemetry
from app.tower.notation import parse_element
from app.utils import canonical_json
from app.verification.runner import run_suite
from app.verification.suites import SUITES

Outcome = tuple[Any, int]

STATUS_EXIT_CODES = {
    ReportStatus.VERIFIED: ExitCode.OK,
    ReportStatus.COUNTEREXAMPLE: ExitCode.COUNTEREXAMPLE,
    ReportStatus.INCONCLUSIVE: ExitCode.INCONCLUSIVE,
}


def safe_cleanup(cleanup_func: Callable[[], Any], resource_name: str) -> None:
    """Safely execute cleanup with error handling.

    Args:
        cleanup_func: The cleanup function to execute
        resource_name: Name of the resource being cleaned up for logging
    """
    try:
        cleanup_func()
        logger.debug(f'{resource_name} cleanup completed')
    except Exception as e:
        logger.exception(f'{resource_name} cleanup failed: {e}')


def _alpha(session: Session, args: argparse.Namespace) -> CohClass:
    value = session.evaluate(args.expression, args.field)
    if not isinstance(value, CohClass) or value.degree != 2:
        raise ParseError(f'{args.expression!r} is not a degree 2 class')
    return value


def cmd_field(session: Session, args: argparse.Namespace) -> Outcome:
    """Describe the field defined by the tower flags or, failing that, the default field.

    Returns:
        The field description and exit code 0.
    """
    field = session.field(args.field)
    return {
        'handle': args.field or session.default_field,
        'q': field.q,
        'ell': field.ell,
        'n': field.n,
        'depth': field.depth,
        'precision': field.precision,
        'zeta': field.zeta,
        'basis': list(field.basis_names),
    }, ExitCode.OK


def cmd_eval(session: Session, args: argparse.Namespace) -> Outcome:
    """Evaluate an expression.

    Returns:
        The JSON form of the value and exit code 0.
    """
    return value_json(session.evaluate(args.expression, args.field)), ExitCode.OK


def cmd_ext(session: Session, args: argparse.Namespace) -> Outcome:
    """Build an unramified or Kummer extension of a field handle.

    Returns:
        The extension description and exit code 0.

    Raises:
        ConfigError: When the flags do not match the extension kind.
    """
    base = session.field(args.field)
    if args.kind == ExtensionKind.UNRAMIFIED:
        if args.degree is None:
            raise ConfigError('an unramified extension needs --degree')
        extension = make_unramified(base, args.degree)
    else:
        if args.radicand is None:
            raise ConfigError('a Kummer extension needs --radicand')
        extension = make_kummer(base, parse_element(base, args.radicand), args.exponent)
    return extension.describe(), ExitCode.OK


def cmd_rost(session: Session, args: argparse.Namespace) -> Outcome:
    """Compute the Rost kernel of a Brauer class.

    Returns:
        The kernel generators and exit code 0.
    """
    alpha = _alpha(session, args)
    kernel = rost_kernel(alpha)
    result = {'alpha': alpha.describe(), 'period': alpha.period, 'R': kernel.describe(), 'order': kernel.order}
    return result, ExitCode.OK


def cmd_suslin(session: Session, args: argparse.Namespace) -> Outcome:
    """Compute the Suslin group and the reduced norm classes of a Brauer class.

    Returns:
        Both subgroups with their exactness flags and exit code 0.
    """
    alpha = _alpha(session, args)
    suslin = suslin_group(alpha)
    norms = nrd_class_group(alpha)
    return {
        'alpha': alpha.describe(),
        'S': suslin.group.describe(),
        'S_exactness': str(suslin.exactness),
        'order': suslin.group.order,
        'nrd': norms.group.describe(),
        'nrd_exactness': str(norms.exactness),
    }, ExitCode.OK


def cmd_report(session: Session, args: argparse.Namespace) -> Outcome:
    """Compare the Rost kernel with the Suslin group.

    Returns:
        The report and the exit code of its status.
    """
    report = quotient_report(_alpha(session, args))
    return report.to_json(), STATUS_EXIT_CODES[report.status]


def cmd_verify(session: Session, args: argparse.Namespace) -> Outcome:
    """Run a verification suite over the scope given by the flags.

    Returns:
        The suite summary and its exit code.
    """
    name = SuiteName.resolve(args.suite)
    scope = SUITES[name].default_scope.override(
        q=args.q,
        ell=args.ell,
        n=args.n,
        depth=args.depth,
        precision=args.precision,
        seed=args.seed,
        samples=args.samples,
    )
    summary = run_suite(name, scope, args.jobs)
    return summary.model_dump(mode='json', by_alias=True), summary.exit_code


def cmd_albert(session: Session, args: argparse.Namespace) -> Outcome:
    """Check R((a, b) + (c, d)) against the similarity factors of the Albert form.

    Returns:
        The three subgroups, the form invariants and exit code 0 or 1.
    """
    field = session.field(args.field)
    a, b, c, d = (parse_element(field, text) for text in args.elements)
    check = check_albert_symbols(a, b, c, d)
    result = check.to_json() | {
        'anisotropic_dimension': anisotropic_dimension(check.form),
        'witt_index': witt_index(check.form),
        'isotropic': isotropic(check.form),
        'discriminant': list(discriminant_class(check.form).exponents),
    }
    return result, ExitCode.OK if check.holds else ExitCode.COUNTEREXAMPLE


HANDLERS: dict[Command, Callable[[Session, argparse.Namespace], Outcome]] = {
    Command.FIELD: cmd_field,
    Command.EVAL: cmd_eval,
    Command.EXT: cmd_ext,
    Command.ROST: cmd_rost,
    Command.SUSLIN: cmd_suslin,
    Command.REPORT: cmd_report,
    Command.VERIFY: cmd_verify,
    Command.ALBERT: cmd_albert,
}


def build_parser() -> argparse.ArgumentParser:
    """The argument parser of every subcommand.

    Returns:
        The parser.
    """
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--config', type=Path, help='file of field/ext/class directives')
    common.add_argument('--log-level', default=ROSTLAB_LOG_LEVEL, help='stderr log level')
    common.add_argument('--json-logs', action='store_true', default=SERIALIZE, help='JSON log lines on stderr')
    common.add_argument('--jobs', type=int, help='worker processes for verify, default ROSTLAB_JOBS or all cores')
    common.add_argument('--seed', type=int, help='seed of randomized suites')
    common.add_argument('--samples', type=int, help='samples of randomized suites')
    common.add_argument('--field', help='field handle, default the last one defined')
    tower = common.add_argument_group('tower')
    for flag in ('--q', '--ell', '--n', '--depth', '--precision'):
        tower.add_argument(flag, type=int)

    parser = argparse.ArgumentParser(prog='rostlab', description='Brauer classes, Rost kernels and Suslin groups')
    commands = parser.add_subparsers(dest='command', required=True)
    commands.add_parser(Command.FIELD, parents=[common], help='define a tower field')
    for command in (Command.EVAL, Command.ROST, Command.SUSLIN, Command.REPORT):
        commands.add_parser(command, parents=[common]).add_argument('expression')
    ext = commands.add_parser(Command.EXT, parents=[common], help='build a cyclic extension')
    ext.add_argument('--kind', type=ExtensionKind, choices=list(ExtensionKind), required=True)
    ext.add_argument('--degree', type=int)
    ext.add_argument('--radicand')
    ext.add_argument('--exponent', type=int, default=1)
    verify = commands.add_parser(Command.VERIFY, parents=[common], help='run a verification suite')
    verify.add_argument('suite', choices=[*SuiteName, *SUITE_ALIASES])
    albert = commands.add_parser(Command.ALBERT, parents=[common], help='check a biquaternion class')
    albert.add_argument('elements', nargs=4, metavar='ELEMENT')
    return parser


def build_session(args: argparse.Namespace) -> Session:
    """Replay the config file, then define the field given by the tower flags.

    Returns:
        The session.

    Raises:
        ConfigError: When tower flags are given without q, ell and depth.
    """
    session = load_session(args.config) if args.config else Session()
    if args.command == Command.VERIFY or all(
        getattr(args, flag) is None for flag in ('q', 'ell', 'n', 'depth', 'precision')
    ):
        return session
    if args.q is None or args.ell is None or args.depth is None:
        raise ConfigError('a field needs --q, --ell and --depth')
    precision = DEFAULT_PRECISION if args.precision is None else args.precision
    args.field = args.field or session.define_field(args.q, args.ell, args.n or 1, args.depth, precision)
    return session


def run(args: argparse.Namespace) -> tuple[Envelope, int]:
    """Execute a parsed command, turning errors into error documents.

    Returns:
        The document to print and the exit code.
    """
    command = Command(args.command)
    try:
        with run_context(command=str(command)):
            result, code = HANDLERS[command](build_session(args), args)
    except (UsageError, ComputationError) as error:
        logger.error('{}: {}', type(error).__name__, error.log_msg)
        return Envelope(command=command, error=type(error).__name__, message=error.log_msg), ExitCode.USAGE
    except InternalVerificationFailed as error:
        logger.error('Internal verification failed: {}', error.log_msg)
        return Envelope(command=command, error=type(error).__name__, message=error.log_msg), ExitCode.COUNTEREXAMPLE
    return Envelope(command=command, result=result), code


def main(argv: Sequence[str] | None = None) -> int:
    """Parse arguments, run one command and print its JSON document on stdout.

    Returns:
        The process exit code.
    """
    args = build_parser().parse_args(argv)
    CustomizeLogger.make_logger(args.log_level, args.json_logs)
    otel_providers = configure_telemetry()
    try:
        envelope, code = run(args)
    finally:
        if otel_providers:
            tracer_provider, meter_provider = otel_providers
            safe_cleanup(tracer_provider.shutdown, 'OTel Tracer')
            safe_cleanup(meter_provider.shutdown, 'OTel Meter')
    sys.stdout.write(canonical_json(envelope.serialize()) + '\n')
    return int(code)


if __name__ == '__main__':
    sys.exit(main())
