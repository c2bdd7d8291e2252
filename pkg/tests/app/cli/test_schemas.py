"""Test module for app/cli/schemas.py."""

import pytest
from pydantic import ValidationError

from app.cli.schemas import Envelope, ExtensionDirective, FieldDirective
from app.constants import Command, ExtensionKind


def test_envelope_serializes_with_schema_key() -> None:
    """Absent fields are dropped and the version is called 'schema'."""
    document = Envelope(command=Command.EVAL, result={'kind': 'class'}).serialize()
    assert document == {'schema': 1, 'command': 'eval', 'result': {'kind': 'class'}}


def test_envelope_error_document() -> None:
    """Errors carry a name and a message."""
    document = Envelope(command=Command.FIELD, error='RootsOfUnityMissing', message='ell^n does not divide').serialize()
    assert 'result' not in document
    assert document['error'] == 'RootsOfUnityMissing'


def test_envelope_rejects_result_and_error() -> None:
    """A document is a result or an error."""
    with pytest.raises(ValidationError):
        Envelope(command=Command.EVAL, result=1, error='ParseError')


@pytest.mark.parametrize(
    'values',
    [
        {'name': 'E', 'field': 'F', 'kind': ExtensionKind.UNRAMIFIED},
        {'name': 'E', 'field': 'F', 'kind': ExtensionKind.UNRAMIFIED, 'f': 2, 'b': 'x1'},
        {'name': 'E', 'field': 'F', 'kind': ExtensionKind.KUMMER, 'f': 2},
    ],
)
def test_extension_directive_kinds(values: dict[str, object]) -> None:
    """Unramified extensions take f, Kummer extensions take b."""
    with pytest.raises(ValidationError):
        ExtensionDirective.model_validate(values)


def test_field_directive_defaults() -> None:
    """n defaults to 1 and unknown options are refused."""
    assert FieldDirective(name='F', q=3, ell=2, depth=2).n == 1
    with pytest.raises(ValidationError):
        FieldDirective.model_validate({'name': 'F', 'q': 3, 'ell': 2, 'depth': 2, 'colour': 'red'})
