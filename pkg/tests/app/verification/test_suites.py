"""Test module for app/verification/suites.py."""

import pytest
from pytest_mock import MockerFixture

from app.cohomology.classes import from_vector
from app.constants import ReportStatus, SuiteName
from app.exceptions import ConfigError
from app.rost.inductive import InductivePairProblem
from app.tower.classes import ClassVector, class_representative
from app.tower.field import TowerField
from app.verification.runner import run_suite
from app.verification.scope import SuiteScope
from app.verification.suites import INDUCTIVE_PROBLEMS, SUITES, inductive_candidates

LOCAL = SuiteScope(q=3, ell=2, n=1, depth=1, samples=20)


@pytest.mark.parametrize(
    'name',
    [
        SuiteName.STEINBERG,
        SuiteName.RESIDUE_FORMULAS,
        SuiteName.PERIOD_POWERS,
        SuiteName.QUOTIENT_FORMULA,
        SuiteName.NORM_WITNESSES,
    ],
)
def test_local_field_runs(name: SuiteName) -> None:
    """No counterexample over GF(3)((x))."""
    summary = run_suite(name, LOCAL, jobs=1)
    assert summary.cells > 0
    assert summary.counterexamples == 0


@pytest.mark.parametrize('name', [SuiteName.EXACT_SEQUENCE, SuiteName.ROST_DIV_L, SuiteName.NORM_INTERSECTION])
def test_local_field_runs_are_conclusive(name: SuiteName) -> None:
    """Over a local field reduced norms are known exactly, so every cell is verified."""
    summary = run_suite(name, LOCAL, jobs=1)
    assert summary.cells > 0
    assert summary.verified == summary.cells


@pytest.mark.parametrize('name', [SuiteName.ROST_DIV_L, SuiteName.QUOTIENT_FORMULA, SuiteName.ALBERT_FORMS])
def test_two_local_runs(name: SuiteName) -> None:
    """No counterexample over GF(3)((x))((y))."""
    summary = run_suite(name, SuiteScope(samples=20), jobs=1)
    assert summary.cells > 0
    assert summary.counterexamples == 0


def test_dual_path_needs_depth_two() -> None:
    """The two routes only differ above depth one."""
    with pytest.raises(ConfigError):
        SUITES[SuiteName.DUAL_PATH].cells(LOCAL)


def test_dual_path_cells() -> None:
    """The seven nonzero period-2 classes plus the quaternion norm sampling cell."""
    cells = SUITES[SuiteName.DUAL_PATH].cells(SuiteScope())
    assert len(cells) == 8
    assert cells[-1] == ('quaternion-norms', ())


class TestInductivePairs:
    """Problems 2 beta = {a, theta} over GF(5)((x)) with coefficients mod 4."""

    def test_candidates_satisfy_the_relation(self, f5x: TowerField) -> None:
        """Every candidate is a valid problem, including characters without a Kummer presentation."""
        candidates = inductive_candidates(f5x)
        assert 0 < len(candidates) < INDUCTIVE_PROBLEMS
        for a, theta, beta, m in candidates:
            element = class_representative(ClassVector(f5x, theta))
            InductivePairProblem(f5x, from_vector(f5x, 2, beta), ClassVector(f5x, a), element, m)

    def test_cells_cycle_through_candidates(self, f5x: TowerField) -> None:
        """The default scope has one cell per problem, candidates repeating with new one-unit tails."""
        suite = SUITES[SuiteName.INDUCTIVE_PAIRS]
        cells = suite.cells(suite.default_scope)
        assert len(cells) == INDUCTIVE_PROBLEMS
        assert [payload[-1] for _, payload in cells] == list(range(INDUCTIVE_PROBLEMS))
        assert {payload[:-1] for _, payload in cells} == set(inductive_candidates(f5x))

    def test_samples_limit_the_cells(self) -> None:
        """--samples caps the number of problems."""
        suite = SUITES[SuiteName.INDUCTIVE_PAIRS]
        assert len(suite.cells(suite.default_scope.override(samples=5))) == 5

    def test_default_run(self) -> None:
        """All one hundred problems are solved."""
        summary = run_suite(SuiteName.INDUCTIVE_PAIRS, jobs=1)
        assert summary.cells == INDUCTIVE_PROBLEMS
        assert summary.verified == INDUCTIVE_PROBLEMS

    def test_needs_n_at_least_two(self) -> None:
        """With n = 1 there is no m in 1..n-1."""
        with pytest.raises(ConfigError):
            SUITES[SuiteName.INDUCTIVE_PAIRS].cells(SuiteScope(q=5, ell=2, n=1, depth=1))


def test_quotient_mismatch_is_a_counterexample(mocker: MockerFixture) -> None:
    """|R/S| differing from the residue-field count contradicts the quotient formula."""
    report = mocker.Mock(quotient_order=2, rhs_order=1)
    mocker.patch('app.verification.suites.quotient_report', return_value=report)
    status, detail = SUITES[SuiteName.QUOTIENT_FORMULA].check(SuiteScope(), (1, 0, 0))
    assert status == ReportStatus.COUNTEREXAMPLE
    assert detail == {'quotient_order': 2, 'rhs_order': 1}
