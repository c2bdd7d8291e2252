"""Test module for app/logging/logging_config.py."""

import logging
import sys

from opentelemetry import trace
from opentelemetry.sdk.trace import TracerProvider
from pytest_mock import MockerFixture

from app.logging.logging_config import CustomizeLogger, InterceptHandler, get_context, get_trace_context, run_context


def test_make_logger_installs_one_stderr_sink(mocker: MockerFixture) -> None:
    """Stdout stays free for results; warnings are intercepted."""
    loguru_mock = mocker.patch('app.logging.logging_config.loguru_logger')
    CustomizeLogger.make_logger('debug', serialize=True)

    loguru_mock.remove.assert_called_once_with()
    loguru_mock.add.assert_called_once_with(sys.stderr, enqueue=False, backtrace=False, level='DEBUG', serialize=True)
    warnings_logger = logging.getLogger('py.warnings')
    assert [type(handler) for handler in warnings_logger.handlers] == [InterceptHandler]
    assert not warnings_logger.propagate


def test_intercepted_records_reach_loguru(mocker: MockerFixture) -> None:
    """Standard library records are logged again at their own level."""
    loguru_mock = mocker.patch('app.logging.logging_config.loguru_logger')
    loguru_mock.level.return_value.name = 'WARNING'
    record = logging.LogRecord('galois', logging.WARNING, __file__, 1, 'slow path for %s', ('GF(9)',), None)
    InterceptHandler().emit(record)
    loguru_mock.opt.return_value.log.assert_called_once_with('WARNING', 'slow path for GF(9)')


def test_run_context_nests_and_resets() -> None:
    """Inner blocks see the outer fields and the context is restored on exit."""
    assert get_context() == {}
    with run_context(command='verify'):
        with run_context(suite='steinberg'):
            assert get_context() == {'command': 'verify', 'suite': 'steinberg'}
        assert get_context() == {'command': 'verify'}
    assert get_context() == {}


def test_trace_context_inside_a_span() -> None:
    """Ids are zero-padded hex of the active span."""
    tracer = TracerProvider().get_tracer('test')
    with tracer.start_as_current_span('cell'):
        ids = get_trace_context()
    assert len(ids['trace_id']) == 32
    assert len(ids['span_id']) == 16
    assert ids['trace_id'] != 'none'


def test_trace_context_outside_a_span() -> None:
    """No active span gives 'none' for both ids."""
    assert trace.get_current_span().get_span_context().is_valid is False
    assert get_trace_context() == {'trace_id': 'none', 'span_id': 'none'}
