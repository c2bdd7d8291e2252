"""Outcomes of verification cells and their reduction into a suite summary."""

from collections.abc import Sequence
from typing import Any

from pydantic import BaseModel, ConfigDict, Field, model_validator
from typing_extensions import Self

from app.constants import JSON_SCHEMA_VERSION, ExitCode, ReportStatus, SuiteName


class CellResult(BaseModel):
    """One checked cell: an alpha, a sample chunk or a generated problem."""

    model_config = ConfigDict(extra='forbid', frozen=True)

    cell: str
    status: ReportStatus
    detail: dict[str, Any] = {}


class SuiteSummary(BaseModel):
    """Counts per status and the cells that were not verified."""

    model_config = ConfigDict(extra='forbid')

    schema_version: int = Field(JSON_SCHEMA_VERSION, serialization_alias='schema')
    suite: SuiteName
    scope: dict[str, int]
    cells: int
    verified: int
    counterexamples: int
    inconclusive: int
    failures: list[CellResult] = []

    @model_validator(mode='after')
    def check_counts(self) -> Self:
        """The three status counts must add up to the number of cells.

        Raises:
            ValueError: Inconsistent counts

        Returns:
            Self: this instance
        """
        if self.verified + self.counterexamples + self.inconclusive != self.cells:
            raise ValueError('status counts do not add up to the number of cells')
        return self

    @property
    def exit_code(self) -> int:
        """0 when everything verified, 1 on a counterexample, 3 when some cells are inconclusive."""
        if self.counterexamples:
            return ExitCode.COUNTEREXAMPLE
        if self.inconclusive:
            return ExitCode.INCONCLUSIVE
        return ExitCode.OK


def summarize(suite: SuiteName, scope: dict[str, int], results: Sequence[CellResult]) -> SuiteSummary:
    """Reduce cell results; the failure list keeps the order of the cells."""
    counts = {status: 0 for status in ReportStatus}
    for result in results:
        counts[result.status] += 1
    return SuiteSummary(
        suite=suite,
        scope=scope,
        cells=len(results),
        verified=counts[ReportStatus.VERIFIED],
        counterexamples=counts[ReportStatus.COUNTEREXAMPLE],
        inconclusive=counts[ReportStatus.INCONCLUSIVE],
        failures=[result for result in results if result.status != ReportStatus.VERIFIED],
    )
