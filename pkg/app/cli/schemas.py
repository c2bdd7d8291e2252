"""Session directives and JSON documents printed by the CLI."""

from typing import Any, Literal

from pydantic import BaseModel, ConfigDict, Field, model_validator
from typing_extensions import Self

from app.constants import DEFAULT_PRECISION, JSON_SCHEMA_VERSION, Command, ExtensionKind


class RestrictiveBaseModel(BaseModel):
    """Base model to prevent additional properties without strict type checking."""

    model_config = ConfigDict(strict=False, extra='forbid')


class FieldDirective(RestrictiveBaseModel):
    """`field NAME q=.. ell=.. n=.. depth=.. [precision=..]`."""

    directive: Literal['field'] = 'field'
    name: str
    q: int
    ell: int
    n: int = 1
    depth: int
    precision: int = DEFAULT_PRECISION


class ExtensionDirective(RestrictiveBaseModel):
    """`ext NAME FIELD unramified f=..` or `ext NAME FIELD kummer b=EXPR m=..`."""

    directive: Literal['ext'] = 'ext'
    name: str
    field: str
    kind: ExtensionKind
    f: int | None = None
    b: str | None = None
    m: int = 1

    @model_validator(mode='after')
    def check_kind(self) -> Self:
        """Unramified extensions take f, Kummer extensions take b.

        Raises:
            ValueError: Bad input

        Returns:
            Self: this instance
        """
        if self.kind == ExtensionKind.UNRAMIFIED and (self.f is None or self.b is not None):
            raise ValueError('an unramified extension needs f and no radicand')
        if self.kind == ExtensionKind.KUMMER and (self.b is None or self.f is not None):
            raise ValueError('a Kummer extension needs b and no residue degree')
        return self


class ClassDirective(RestrictiveBaseModel):
    """`class NAME FIELD EXPR`: a named cohomology class or class vector."""

    directive: Literal['class'] = 'class'
    name: str
    field: str
    expression: str


Directive = FieldDirective | ExtensionDirective | ClassDirective


class Envelope(RestrictiveBaseModel):
    """Every document printed on stdout."""

    schema_version: int = Field(JSON_SCHEMA_VERSION, serialization_alias='schema')
    command: Command
    result: Any = None
    error: str | None = None
    message: str | None = None

    @model_validator(mode='after')
    def check_outcome(self) -> Self:
        """A document carries a result or an error, not both.

        Raises:
            ValueError: Bad input

        Returns:
            Self: this instance
        """
        if self.error is not None and self.result is not None:
            raise ValueError('a document cannot carry both a result and an error')
        return self

    def serialize(self) -> dict[str, Any]:
        """JSON form with the versioned schema key; absent fields are dropped."""
        dumped = self.model_dump(mode='json', by_alias=True)
        return {key: value for key, value in dumped.items() if value is not None}
