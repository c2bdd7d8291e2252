"""Test module for app/rost/report.py."""

import pytest

from app.cohomology.classes import CohClass, symbol, zero_class
from app.constants import Exactness, ReportStatus
from app.exceptions import DegreeUnsupported
from app.rost.report import quotient_report, quotient_rhs_order
from app.tower.classes import kummer_class
from app.tower.field import TowerField
from app.tower.notation import parse_element


def _symbol(field: TowerField, first: str, second: str) -> CohClass:
    return symbol([kummer_class(parse_element(field, first)), kummer_class(parse_element(field, second))])


def test_report_of_mixed_class(f3xy: TowerField) -> None:
    """R({x, y}) = S({x, y}) and the residue-field quotient is trivial too."""
    report = quotient_report(_symbol(f3xy, 'x1', 'x2'))
    assert report.status == ReportStatus.VERIFIED
    assert report.suslin_exactness == Exactness.EXACT
    assert report.quotient_order == 1
    assert report.rhs_order == 1
    assert report.witnesses == ()
    assert report.rost.order == 4


def test_report_over_local_field(f3x: TowerField) -> None:
    """Everything is a reduced norm over a local field."""
    report = quotient_report(_symbol(f3x, 'zeta', 'x1'))
    assert report.status == ReportStatus.VERIFIED
    assert report.rost.order == report.suslin.order == 4
    assert quotient_rhs_order(_symbol(f3x, 'zeta', 'x1')) == 1


def test_to_json(f3xy: TowerField) -> None:
    """Stable keys."""
    document = quotient_report(_symbol(f3xy, 'x1', 'x2')).to_json()
    assert set(document) == {
        'alpha',
        'period',
        'R',
        'S',
        's_exact',
        'quotient_order',
        'rhs_order',
        'witnesses',
        'status',
    }
    assert document['status'] == 'verified'
    assert document['alpha'] == {'{x1,x2}': 1}


def test_degree_check(f3x: TowerField) -> None:
    """Only Brauer classes."""
    with pytest.raises(DegreeUnsupported):
        quotient_report(zero_class(f3x, 1))
    with pytest.raises(DegreeUnsupported):
        quotient_rhs_order(zero_class(f3x, 3))
