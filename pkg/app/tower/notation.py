"""Reading and writing elements in the ``coeff*var^k`` notation.

Examples: ``2*x1^2*x2^-1``, ``1+x1``, ``zeta*(1+x2)^3``, ``-1``. ``zeta`` and ``u`` name the fixed generator of
GF(q)*; integers are taken in the integer representation of GF(q) (reduced mod p when q is prime).
"""

import re

from app.constants import ZETA_NAME
from app.exceptions import ParseError
from app.tower.element import FieldElement, add, constant, from_integer, monomial, mul, neg, power
from app.tower.field import TowerField

ZETA_ALIASES = frozenset({ZETA_NAME, 'u'})

_TOKEN = re.compile(r'\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[-+*^()])|(?P<bad>\S))')


def _tokenize(text: str) -> list[str]:
    tokens = []
    for match in _TOKEN.finditer(text):
        if match.group('bad'):
            raise ParseError(f'unexpected character {match.group("bad")!r} in {text!r}')
        tokens.append(match.group('int') or match.group('name') or match.group('op'))
    if not tokens:
        raise ParseError('empty element expression')
    return tokens


class _ElementParser:
    """Recursive-descent parser over a token list."""

    def __init__(self, field: TowerField, tokens: list[str]) -> None:
        self.field = field
        self.tokens = tokens
        self.position = 0

    def peek(self) -> str | None:
        return self.tokens[self.position] if self.position < len(self.tokens) else None

    def take(self) -> str:
        token = self.peek()
        if token is None:
            raise ParseError('element expression ends early')
        self.position += 1
        return token

    def expression(self) -> FieldElement:
        value = self.term()
        while self.peek() in ('+', '-'):
            sign = self.take()
            following = self.term()
            value = add(value, following if sign == '+' else neg(following))
        return value

    def term(self) -> FieldElement:
        value = self.factor()
        while self.peek() == '*':
            self.take()
            value = mul(value, self.factor())
        return value

    def factor(self) -> FieldElement:
        if self.peek() == '-':
            self.take()
            return neg(self.factor())
        value = self.base()
        if self.peek() == '^':
            self.take()
            sign = -1 if self.peek() == '-' else 1
            if sign < 0:
                self.take()
            exponent = self.take()
            if not exponent.isdigit():
                raise ParseError(f'exponent {exponent!r} is not an integer')
            value = power(value, sign * int(exponent))
        return value

    def base(self) -> FieldElement:
        token = self.take()
        if token == '(':
            value = self.expression()
            if self.take() != ')':
                raise ParseError('unbalanced parentheses')
            return value
        if token.isdigit():
            return self.integer(int(token))
        if token in ZETA_ALIASES:
            return monomial(self.field, (1,) + (0,) * self.field.depth)
        if token in self.field.level_names:
            level = self.field.level_names.index(token) + 1
            return monomial(self.field, tuple(1 if index == level else 0 for index in range(self.field.rank)))
        raise ParseError(f'unknown name {token!r} for {self.field}')

    def integer(self, value: int) -> FieldElement:
        if self.field.q == self.field.p:
            return from_integer(self.field, value)
        if value >= self.field.q:
            raise ParseError(f'{value} is not an element of GF({self.field.q})')
        return constant(self.field, value)


def parse_element(field: TowerField, text: str) -> FieldElement:
    """Parse an element of ``field``.

    Args:
        field: Field the names refer to.
        text: Expression in the element notation.

    Returns:
        The element.

    Raises:
        ParseError: On malformed input.
    """
    parser = _ElementParser(field, _tokenize(text))
    value = parser.expression()
    if parser.peek() is not None:
        raise ParseError(f'trailing input {parser.peek()!r} in {text!r}')
    return value


def _terms(element: FieldElement) -> list[tuple[int, tuple[int, ...]]]:
    if element.is_zero:
        return []
    if element.field.depth == 0:
        return [(element.unit[0], ())]
    terms = []
    for index, coefficient in enumerate(element.unit):
        for value, exponents in _terms(coefficient):
            terms.append((value, (*exponents, element.valuation + index)))
    return terms


def format_element(element: FieldElement) -> str:
    """Write an element in the notation read by ``parse_element``, lowest top-level exponent first."""
    pieces = []
    for value, exponents in _terms(element):
        factors = [
            name if exponent == 1 else f'{name}^{exponent}'
            for name, exponent in zip(element.field.level_names, exponents, strict=True)
            if exponent
        ]
        if value != 1 or not factors:
            factors.insert(0, str(value))
        pieces.append('*'.join(factors))
    return '+'.join(pieces) if pieces else '0'
