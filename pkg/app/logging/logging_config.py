"""Loguru setup for the command line tool.

Results go to stdout as JSON, so the only sink is stderr. Every record carries the fields bound with
``run_context`` (subcommand, suite, cell) and the ids of the current OpenTelemetry span.
"""

import logging
import sys
from collections.abc import Iterator
from contextlib import contextmanager
from contextvars import ContextVar
from types import FrameType
from typing import TYPE_CHECKING

from loguru import logger as loguru_logger
from opentelemetry import trace as otel_trace

from app.constants import DEPLOYMENT_ENVS, ENV, ROSTLAB_LOG_LEVEL

if TYPE_CHECKING:
    from loguru import Record

# JSON lines in deployed environments
SERIALIZE = ENV in DEPLOYMENT_ENVS

NO_SPAN = {'trace_id': 'none', 'span_id': 'none'}

_run_context: ContextVar[dict[str, str]] = ContextVar('rostlab_run_context', default={})


def get_trace_context() -> dict[str, str]:
    """Hex trace and span ids of the active span, or 'none' for both."""
    span_context = otel_trace.get_current_span().get_span_context()
    if not span_context.is_valid:
        return dict(NO_SPAN)
    return {'trace_id': f'{span_context.trace_id:032x}', 'span_id': f'{span_context.span_id:016x}'}


def get_context() -> dict[str, str]:
    """Fields bound by the enclosing ``run_context`` blocks."""
    return dict(_run_context.get())


@contextmanager
def run_context(**fields: str) -> Iterator[None]:
    """Bind fields to every log record emitted inside the block.

    Args:
        **fields: Context values, e.g. ``suite='rost-div-l'``.

    Yields:
        None
    """
    token = _run_context.set(_run_context.get() | fields)
    try:
        yield
    finally:
        _run_context.reset(token)


def _add_context(record: 'Record') -> None:
    record['extra'].update(get_context() | get_trace_context())


logger = loguru_logger.patch(_add_context)


class InterceptHandler(logging.Handler):
    """Forward records of the standard logging module to loguru."""

    def emit(self, record: logging.LogRecord) -> None:
        """Log the record through loguru at the matching level, attributed to the original caller.

        Args:
            record: Standard library log record.
        """
        try:
            level: str | int = loguru_logger.level(record.levelname).name
        except ValueError:
            level = record.levelno

        frame: FrameType | None = logging.currentframe()
        depth = 2
        while frame is not None and frame.f_code.co_filename == logging.__file__:
            frame = frame.f_back
            depth += 1
        loguru_logger.opt(depth=depth, exception=record.exc_info).log(level, record.getMessage())


class CustomizeLogger:
    """Install the stderr sink and route ``py.warnings`` through loguru."""

    @classmethod
    def make_logger(cls, level: str = ROSTLAB_LOG_LEVEL, serialize: bool = SERIALIZE) -> None:
        """Replace every handler with one stderr sink.

        Args:
            level: Minimum level written to stderr.
            serialize: Emit JSON log lines instead of human readable ones.
        """
        logging.getLogger().handlers = []
        loguru_logger.remove()
        loguru_logger.add(sys.stderr, enqueue=False, backtrace=False, level=level.upper(), serialize=serialize)
        cls._capture_warnings()

    @staticmethod
    def _capture_warnings() -> None:
        # galois and numpy report numerical issues as warnings
        logging.captureWarnings(True)
        warnings_logger = logging.getLogger('py.warnings')
        warnings_logger.handlers = [InterceptHandler()]
        warnings_logger.propagate = False
