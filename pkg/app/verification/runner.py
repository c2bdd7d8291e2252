"""Run a suite over a worker pool and reduce the cells into a summary."""

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict
from typing import NamedTuple

from app.constants import ROSTLAB_JOBS, ReportStatus, SuiteName
from app.exceptions import ConfigError, InternalVerificationFailed, UnsupportedShape
from app.logging.logging_config import logger, run_context
from app.telemetry import get_cell_counter, get_tracer
from app.verification.results import CellResult, SuiteSummary, summarize
from app.verification.scope import SuiteScope
from app.verification.suites import SUITES, Payload


class CellTask(NamedTuple):
    """Everything a worker needs to check one cell."""

    suite: SuiteName
    scope: SuiteScope
    cell: str
    payload: Payload


def execute(task: CellTask) -> CellResult:
    """Check one cell.

    Internal verification failures become counterexample cells and unsupported shapes become inconclusive cells,
    so one bad cell does not abort the sweep.
    """
    suite = SUITES[task.suite]
    with run_context(suite=str(task.suite), cell=task.cell):
        try:
            status, detail = suite.check(task.scope, task.payload)
        except InternalVerificationFailed as error:
            logger.error('Internal verification failed: {}', error.log_msg)
            status, detail = ReportStatus.COUNTEREXAMPLE, {'error': type(error).__name__, 'message': error.log_msg}
        except UnsupportedShape as error:
            logger.warning('Unsupported shape: {}', error.log_msg)
            status, detail = ReportStatus.INCONCLUSIVE, {'error': type(error).__name__, 'message': error.log_msg}
    return CellResult(cell=task.cell, status=status, detail=detail)


def resolve_jobs(jobs: int | None) -> int:
    """Worker count: the flag, else ROSTLAB_JOBS, else the machine parallelism.

    Raises:
        ConfigError: For a non-positive or malformed count.
    """
    if jobs is None and ROSTLAB_JOBS:
        try:
            jobs = int(ROSTLAB_JOBS)
        except ValueError as error:
            raise ConfigError(f'ROSTLAB_JOBS={ROSTLAB_JOBS!r} is not an integer') from error
    if jobs is None:
        return os.cpu_count() or 1
    if jobs < 1:
        raise ConfigError(f'jobs must be positive, got {jobs}')
    return jobs


def map_cells(tasks: list[CellTask], workers: int) -> list[CellResult]:
    """Check the cells in order, in process when there is a single worker."""
    if workers == 1 or len(tasks) <= 1:
        return [execute(task) for task in tasks]
    chunksize = max(1, len(tasks) // (4 * workers))
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(execute, tasks, chunksize=chunksize))


def run_suite(name: SuiteName, scope: SuiteScope | None = None, jobs: int | None = None) -> SuiteSummary:
    """Run every cell of a suite.

    Args:
        name: The suite.
        scope: Tower and sampling parameters, default the suite's own.
        jobs: Worker processes, see ``resolve_jobs``.

    Returns:
        The summary; results do not depend on the number of workers.

    Raises:
        UsageError: If the scope does not suit the suite.
    """
    suite = SUITES[name]
    scope = scope or suite.default_scope
    workers = resolve_jobs(jobs)
    counter = get_cell_counter()
    with run_context(suite=str(name)), get_tracer().start_as_current_span(f'verify {name}') as span:
        tasks = [CellTask(name, scope, cell, payload) for cell, payload in suite.cells(scope)]
        logger.info('Checking {} cells of {} with {} workers', len(tasks), name, workers)
        results = map_cells(tasks, workers)
        for result in results:
            counter.add(1, {'suite': str(name), 'outcome': str(result.status)})
        span.set_attribute('rostlab.cells', len(results))
        summary = summarize(name, asdict(scope), results)
        logger.info(
            '{}: {} verified, {} counterexamples, {} inconclusive',
            name,
            summary.verified,
            summary.counterexamples,
            summary.inconclusive,
        )
    return summary
