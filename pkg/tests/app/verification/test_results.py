"""Test module for app/verification/results.py."""

import pytest
from pydantic import ValidationError

from app.constants import ExitCode, ReportStatus, SuiteName
from app.verification.results import CellResult, SuiteSummary, summarize


def _results(*statuses: ReportStatus) -> list[CellResult]:
    return [CellResult(cell=f'cell-{index}', status=status) for index, status in enumerate(statuses)]


@pytest.mark.parametrize(
    ('statuses', 'exit_code'),
    [
        ((ReportStatus.VERIFIED, ReportStatus.VERIFIED), ExitCode.OK),
        ((ReportStatus.VERIFIED, ReportStatus.INCONCLUSIVE), ExitCode.INCONCLUSIVE),
        ((ReportStatus.INCONCLUSIVE, ReportStatus.COUNTEREXAMPLE), ExitCode.COUNTEREXAMPLE),
    ],
)
def test_exit_code(statuses: tuple[ReportStatus, ...], exit_code: int) -> None:
    """Counterexamples win over inconclusive cells."""
    assert summarize(SuiteName.STEINBERG, {}, _results(*statuses)).exit_code == exit_code


def test_failures_keep_cell_order() -> None:
    """Only cells that were not verified are listed."""
    summary = summarize(
        SuiteName.ROST_DIV_L,
        {'q': 3},
        _results(ReportStatus.COUNTEREXAMPLE, ReportStatus.VERIFIED, ReportStatus.INCONCLUSIVE),
    )
    assert [failure.cell for failure in summary.failures] == ['cell-0', 'cell-2']
    assert (summary.verified, summary.counterexamples, summary.inconclusive) == (1, 1, 1)


def test_counts_must_add_up() -> None:
    """The validator rejects inconsistent counts."""
    with pytest.raises(ValidationError):
        SuiteSummary(suite=SuiteName.STEINBERG, scope={}, cells=3, verified=1, counterexamples=0, inconclusive=0)


def test_schema_alias() -> None:
    """The version is dumped under the key 'schema'."""
    document = summarize(SuiteName.STEINBERG, {}, []).model_dump(mode='json', by_alias=True)
    assert document['schema'] == 1
    assert document['suite'] == 'steinberg'
