"""The small expression language of `rostlab eval` and of class directives.

    expr := 'symbol' '{' arg (',' arg)* '}' [FIELD]
          | 'class' ELEMENT [FIELD]
          | 'residue' group | 'specialize' group | 'decompose' group | 'period' group | 'index' group
          | 'cup' group group | 'add' group group
          | HANDLE | group
    group := '(' expr ')'

Arguments of symbols are elements in the element notation or names of class-vector handles.
"""

from collections.abc import Mapping
from typing import Any

from app.cohomology.classes import CohClass, cup, degree_one, residue, specialize, symbol
from app.cohomology.decomposition import BrauerDecomposition, decompose
from app.exceptions import ParseError
from app.extensions.splitting import brauer_index
from app.tower.classes import ClassVector, kummer_class
from app.tower.field import TowerField
from app.tower.notation import parse_element

Value = CohClass | ClassVector | BrauerDecomposition | int

UNARY = ('residue', 'specialize', 'decompose', 'period', 'index')
BINARY = ('cup', 'add')


class _ExpressionParser:
    def __init__(
        self,
        text: str,
        fields: Mapping[str, TowerField],
        handles: Mapping[str, Value],
        default: TowerField | None,
    ) -> None:
        self.text = text
        self.position = 0
        self.fields = fields
        self.handles = handles
        self.default = default

    def skip(self) -> None:
        while self.position < len(self.text) and self.text[self.position].isspace():
            self.position += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.position] if self.position < len(self.text) else ''

    def expect(self, character: str) -> None:
        if self.peek() != character:
            raise ParseError(f'expected {character!r} at position {self.position} of {self.text!r}')
        self.position += 1

    def word(self) -> str:
        self.skip()
        start = self.position
        text = self.text
        while self.position < len(text) and (text[self.position].isalnum() or text[self.position] == '_'):
            self.position += 1
        return self.text[start : self.position]

    def until(self, stops: str) -> str:
        """Raw text up to the first stop character outside parentheses."""
        start = self.position
        depth = 0
        while self.position < len(self.text):
            character = self.text[self.position]
            if depth == 0 and character in stops:
                break
            depth += {'(': 1, ')': -1}.get(character, 0)
            self.position += 1
        return self.text[start : self.position].strip()

    def field(self, name: str | None) -> TowerField:
        if name is not None:
            return self.fields[name]
        if self.default is None:
            raise ParseError('no field is defined; pass tower flags or a config file')
        return self.default

    def trailing_field(self, text: str) -> tuple[str, str | None]:
        """Split a trailing field handle off raw element text."""
        head, _, last = text.rpartition(' ')
        if head and last in self.fields:
            return head.strip(), last
        return text, None

    def expression(self) -> Value:
        if self.peek() == '(':
            return self.group()
        name = self.word()
        if not name:
            raise ParseError(f'expected an expression at position {self.position} of {self.text!r}')
        if name == 'symbol':
            return self.symbol()
        if name == 'class':
            text, field_name = self.trailing_field(self.until(')'))
            return kummer_class(parse_element(self.field(field_name), text))
        if name in UNARY:
            return apply_unary(name, self.group())
        if name in BINARY:
            return apply_binary(name, self.group(), self.group())
        if name in self.handles:
            return self.handles[name]
        raise ParseError(f'unknown operation or handle {name!r}')

    def group(self) -> Value:
        self.expect('(')
        value = self.expression()
        self.expect(')')
        return value

    def symbol(self) -> CohClass:
        self.expect('{')
        raw = self.until('}')
        self.expect('}')
        field_name = None
        if self.peek().isalpha():
            start = self.position
            candidate = self.word()
            if candidate in self.fields:
                field_name = candidate
            else:
                self.position = start
        field = self.field(field_name)
        arguments = [self.argument(field, item.strip()) for item in raw.split(',')]
        return symbol(arguments)

    def argument(self, field: TowerField, text: str) -> ClassVector:
        handle = self.handles.get(text)
        if isinstance(handle, ClassVector):
            return handle
        return kummer_class(parse_element(field, text))


def _cohomology(value: Value) -> CohClass:
    if isinstance(value, ClassVector):
        return degree_one(value)
    if isinstance(value, CohClass):
        return value
    raise ParseError(f'{type(value).__name__} is not a cohomology class')


def apply_unary(name: str, value: Value) -> Value:
    """Apply a one-argument operation.

    Raises:
        ParseError: If the operand has the wrong type.
    """
    operand = _cohomology(value)
    if name == 'residue':
        return residue(operand)
    if name == 'specialize':
        return specialize(operand)
    if name == 'decompose':
        return decompose(operand)
    if name == 'period':
        return operand.period
    return brauer_index(operand)


def apply_binary(name: str, first: Value, second: Value) -> Value:
    """Apply a two-argument operation.

    Raises:
        ParseError: If an operand has the wrong type.
    """
    if name == 'add':
        if isinstance(first, ClassVector) and isinstance(second, ClassVector):
            return first + second
        return _cohomology(first) + _cohomology(second)
    right = second if isinstance(second, ClassVector) else _cohomology(second)
    return cup(_cohomology(first), right)


def evaluate(
    text: str,
    fields: Mapping[str, TowerField],
    handles: Mapping[str, Value] | None = None,
    default: TowerField | None = None,
) -> Value:
    """Evaluate an expression.

    Args:
        text: The expression.
        fields: Field handles by name.
        handles: Class handles by name.
        default: Field used when an expression names none.

    Returns:
        A class vector, a cohomology class, a decomposition or an integer.

    Raises:
        ParseError: On malformed input or unknown names.
    """
    parser = _ExpressionParser(text, fields, handles or {}, default)
    value = parser.expression()
    if parser.peek():
        raise ParseError(f'trailing input at position {parser.position} of {text!r}')
    return value


def value_json(value: Value) -> Any:
    """JSON form of an evaluated value."""
    if isinstance(value, ClassVector):
        return {'kind': 'class', 'basis': list(value.field.basis_names), 'exponents': list(value.exponents)}
    if isinstance(value, CohClass):
        return {'kind': 'cohomology', 'degree': value.degree, 'coefficients': value.describe()}
    if isinstance(value, BrauerDecomposition):
        return {
            'kind': 'decomposition',
            'unramified_part': value.unramified_part.describe(),
            'ramified_character': list(value.ramified_character.exponents),
            'uniformizer': value.uniformizer,
        }
    return value
