"""Named fields, extensions and classes shared by one CLI invocation."""

import shlex
from pathlib import Path

from pydantic import ValidationError

from app.cli.expressions import Value, evaluate
from app.cli.schemas import ClassDirective, Directive, ExtensionDirective, FieldDirective
from app.constants import ExtensionKind
from app.exceptions import ConfigError
from app.extensions.cyclic import CyclicExtension, make_kummer, make_unramified
from app.logging.logging_config import logger
from app.tower.field import TowerField, make_tower
from app.tower.notation import parse_element


class Session:
    """Handle tables of an invocation; the last field defined is the default one."""

    def __init__(self) -> None:
        """Start with no handles."""
        self.fields: dict[str, TowerField] = {}
        self.extensions: dict[str, CyclicExtension] = {}
        self.classes: dict[str, Value] = {}
        self.default_field: str | None = None

    def field(self, name: str | None = None) -> TowerField:
        """Look up a field handle, the default one when no name is given.

        Raises:
            ConfigError: For an unknown handle or when no field is defined.
        """
        name = name or self.default_field
        if name is None:
            raise ConfigError('no field is defined; pass --q/--ell/--depth or a config file')
        if name not in self.fields:
            raise ConfigError(f'unknown field {name!r}')
        return self.fields[name]

    def evaluate(self, expression: str, field: str | None = None) -> Value:
        """Evaluate an expression against the session handles."""
        return evaluate(expression, self.fields, self.classes, self.field(field))

    def apply(self, directive: Directive) -> None:
        """Define the handle a directive describes.

        Raises:
            ConfigError: When the handle name is already taken.
        """
        if directive.name in self.fields or directive.name in self.extensions or directive.name in self.classes:
            raise ConfigError(f'handle {directive.name!r} is defined twice')
        if isinstance(directive, FieldDirective):
            self.fields[directive.name] = make_tower(
                directive.q, directive.ell, directive.n, directive.depth, directive.precision
            )
            self.default_field = directive.name
        elif isinstance(directive, ExtensionDirective):
            self.extensions[directive.name] = self._extension(directive)
        else:
            self.classes[directive.name] = self.evaluate(directive.expression, directive.field)
        logger.debug('Defined {} handle {}', directive.directive, directive.name)

    def _extension(self, directive: ExtensionDirective) -> CyclicExtension:
        base = self.field(directive.field)
        if directive.kind == ExtensionKind.UNRAMIFIED:
            return make_unramified(base, directive.f or 1)
        return make_kummer(base, parse_element(base, directive.b or '1'), directive.m)

    def define_field(self, q: int, ell: int, n: int, depth: int, precision: int) -> str:
        """Define a field under a fresh name and make it the default.

        Returns:
            The new handle name.
        """
        name = f'F{len(self.fields) + 1}'
        while name in self.fields:
            name += '_'
        self.apply(FieldDirective(name=name, q=q, ell=ell, n=n, depth=depth, precision=precision))
        return name


def parse_directive(line: str) -> Directive | None:
    """Parse one config line; blank lines and `#` comments give None.

    Raises:
        ConfigError: For an unknown keyword or a malformed directive.
    """
    text = line.split('#', 1)[0].strip()
    if not text:
        return None
    keyword, _, rest = text.partition(' ')
    try:
        if keyword == 'class':
            name, field, expression = rest.split(maxsplit=2)
            return ClassDirective(name=name, field=field, expression=expression)
        tokens = shlex.split(rest)
        if keyword == 'field':
            return FieldDirective.model_validate({'name': tokens[0], **_options(tokens[1:])})
        if keyword == 'ext':
            fixed = {'name': tokens[0], 'field': tokens[1], 'kind': tokens[2]}
            return ExtensionDirective.model_validate({**fixed, **_options(tokens[3:])})
    except (ValueError, IndexError, ValidationError) as error:
        raise ConfigError(f'malformed directive {text!r}: {error}') from error
    raise ConfigError(f'unknown directive {keyword!r}')


def _options(tokens: list[str]) -> dict[str, str]:
    options: dict[str, str] = {}
    for token in tokens:
        key, separator, value = token.partition('=')
        if not separator or key in options:
            raise ValueError(f'expected a unique key=value option, got {token!r}')
        options[key] = value
    return options


def load_session(path: Path, session: Session | None = None) -> Session:
    """Read a config file into a session, in file order.

    Raises:
        ConfigError: When the file cannot be read or a line is malformed.
    """
    session = session or Session()
    try:
        lines = path.read_text().splitlines()
    except OSError as error:
        raise ConfigError(f'cannot read {path}: {error.strerror}') from error
    for number, line in enumerate(lines, start=1):
        try:
            directive = parse_directive(line)
        except ConfigError as error:
            raise ConfigError(f'{path}:{number}: {error.log_msg}') from error
        if directive is not None:
            session.apply(directive)
    logger.info('Loaded {} fields and {} classes from {}', len(session.fields), len(session.classes), path)
    return session
