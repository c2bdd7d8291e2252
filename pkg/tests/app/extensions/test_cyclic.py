"""Test module for app/extensions/cyclic.py."""

import pytest

from app.cohomology.classes import symbol
from app.constants import ExtensionKind
from app.exceptions import DivisionByZero, NotAField, NotInBaseField, PreconditionViolated, UnsupportedShape
from app.extensions.cyclic import (
    CyclicExtension,
    cyclic_generators,
    embed,
    galois_action,
    make_kummer,
    make_unramified,
    norm,
    norm_class_group,
    pullback,
    restrict_class,
    splits,
)
from app.tower.classes import ClassVector, all_classes, kummer_class
from app.tower.element import constant, zero
from app.tower.field import TowerField
from app.tower.notation import parse_element
from app.tower.subgroup import full_group, span


class TestKummer:
    """F(sqrt(x)) over GF(3)((x))."""

    def test_shape(self, f3x: TowerField) -> None:
        """Totally ramified of degree 2 with a new uniformizer."""
        extension = make_kummer(f3x, parse_element(f3x, 'x1'), 1)
        assert extension.kind == ExtensionKind.KUMMER
        assert (extension.ramification_index, extension.residue_degree) == (2, 1)
        assert extension.tower.level_names == ('x1_r2',)
        assert extension.describe()['e'] == 2

    def test_generator(self, f3x: TowerField) -> None:
        """The generator squares to the radicand and is negated by the Galois group."""
        radicand = parse_element(f3x, 'x1')
        extension = make_kummer(f3x, radicand, 1)
        assert extension.generator is not None
        assert extension.generator**2 == embed(extension, radicand)
        assert galois_action(extension, extension.generator) == constant(extension.tower, 2) * extension.generator

    def test_norm_of_one_plus_root(self, f3x: TowerField) -> None:
        """N(1 + P) = (1 + P)(1 - P) = 1 - x."""
        extension = make_kummer(f3x, parse_element(f3x, 'x1'), 1)
        assert extension.generator is not None
        element = constant(extension.tower, 1) + extension.generator
        assert norm(extension, element) == parse_element(f3x, '1+2*x1')

    def test_norm_group(self, f3x: TowerField) -> None:
        """Norms are the classes of 1 and -x."""
        extension = make_kummer(f3x, parse_element(f3x, 'x1'), 1)
        assert norm_class_group(extension) == span(f3x, [ClassVector(f3x, (1, 1))])
        assert extension.character_class == ClassVector(f3x, (0, 1))

    def test_pullback_refuses_odd_powers_of_the_root(self, f3x: TowerField) -> None:
        """1 + P is not fixed by P -> -P."""
        extension = make_kummer(f3x, parse_element(f3x, 'x1'), 1)
        assert extension.generator is not None
        with pytest.raises(NotInBaseField):
            pullback(extension, constant(extension.tower, 1) + extension.generator)

    def test_base_elements_are_fixed(self, f3x: TowerField) -> None:
        """Embedded elements are Galois invariant and pull back to themselves."""
        extension = make_kummer(f3x, parse_element(f3x, 'x1'), 1)
        element = embed(extension, parse_element(f3x, '2+x1^-1'))
        assert galois_action(extension, element) == element
        assert pullback(extension, element) == parse_element(f3x, '2+x1^-1')

    def test_restriction_kills_the_radicand(self, f3x: TowerField) -> None:
        """x becomes a square."""
        extension = make_kummer(f3x, parse_element(f3x, 'x1'), 1)
        assert restrict_class(extension, ClassVector(f3x, (0, 1))).order == 1
        assert restrict_class(extension, ClassVector(f3x, (1, 0))).order == 2


class TestQuarticKummer:
    """F(x1^(1/4)) over GF(5)((x1))((x2)), where P^4 = x1 and the Galois group multiplies P by zeta."""

    @pytest.fixture
    def extension(self, f5xy: TowerField) -> CyclicExtension:
        """The degree 4 Kummer extension at level one."""
        return make_kummer(f5xy, parse_element(f5xy, 'x1'), 2)

    def test_shape(self, extension: CyclicExtension) -> None:
        """Totally ramified of degree 4 with four times the precision at level one."""
        assert (extension.ramification_index, extension.degree, extension.level) == (4, 4, 1)
        assert extension.tower.precisions == (8, 2)

    def test_norm_of_one_plus_root(self, extension: CyclicExtension, f5xy: TowerField) -> None:
        """N(1 + P) = 1 - P^4 = 1 - x1."""
        assert extension.generator is not None
        element = constant(extension.tower, 1) + extension.generator
        assert norm(extension, element) == parse_element(f5xy, '1+4*x1')

    def test_norm_is_multiplicative(self, extension: CyclicExtension, f5xy: TowerField) -> None:
        """N(ab) = N(a) N(b) for a = 1 + P and b = 1 + x2."""
        assert extension.generator is not None
        a = constant(extension.tower, 1) + extension.generator
        b = embed(extension, parse_element(f5xy, '1+x2'))
        assert norm(extension, b) == parse_element(f5xy, '1+4*x2')
        assert norm(extension, a * b) == norm(extension, a) * norm(extension, b)
        assert norm(extension, a * b) == parse_element(f5xy, '(1+4*x1)*(1+4*x2)')

    def test_norm_of_base_element(self, extension: CyclicExtension, f5xy: TowerField) -> None:
        """N(c) = c^4 for c in F."""
        element = parse_element(f5xy, '2+x1*x2')
        assert norm(extension, embed(extension, element)) == element**4


class TestUnramified:
    """GF(9)((x)) over GF(3)((x))."""

    def test_shape(self, f3x: TowerField) -> None:
        """Residue degree 2 with the same uniformizer."""
        extension = make_unramified(f3x, 2)
        assert extension.kind == ExtensionKind.UNRAMIFIED
        assert (extension.ramification_index, extension.residue_degree) == (1, 2)
        assert extension.tower.q == 9
        assert extension.radicand == parse_element(f3x, 'zeta')

    def test_generator(self, f3x: TowerField) -> None:
        """A square root of zeta."""
        extension = make_unramified(f3x, 2)
        assert extension.generator is not None
        assert extension.generator**2 == embed(extension, parse_element(f3x, 'zeta'))

    def test_norm_group(self, f3x: TowerField) -> None:
        """Norms are the classes of units."""
        assert norm_class_group(make_unramified(f3x, 2)) == span(f3x, [ClassVector(f3x, (1, 0))])

    def test_kummer_of_zeta_is_unramified(self, f3x: TowerField) -> None:
        """F(sqrt(zeta)) is presented as the unramified extension."""
        assert make_kummer(f3x, parse_element(f3x, 'zeta'), 1).kind == ExtensionKind.UNRAMIFIED

    def test_restriction_kills_units(self, f3x: TowerField) -> None:
        """zeta becomes a square in GF(9)."""
        assert restrict_class(make_unramified(f3x, 2), ClassVector(f3x, (1, 0))).order == 1

    def test_constant_norms_are_onto(self, f3x: TowerField) -> None:
        """Every nonzero constant of GF(3) is the norm of a constant of GF(9)."""
        extension = make_unramified(f3x, 2)
        norms = [norm(extension, constant(extension.tower, value)) for value in range(1, 9)]
        assert parse_element(f3x, '1') in norms
        assert parse_element(f3x, '2') in norms

    def test_every_unit_class_is_a_norm(self, f5x: TowerField) -> None:
        """Over GF(5)((x)) mod 4 the norm group of the quadratic unramified extension holds all unit classes."""
        group = norm_class_group(make_unramified(f5x, 2))
        assert all(group.contains(vector) for vector in all_classes(f5x) if vector.exponents[-1] == 0)
        assert not group.contains(ClassVector(f5x, (0, 1)))

    def test_degree_must_be_an_ell_power(self, f3x: TowerField) -> None:
        """3 is not a power of 2."""
        with pytest.raises(UnsupportedShape):
            make_unramified(f3x, 3)


@pytest.mark.parametrize(
    ('radicand', 'exponent', 'error'),
    [('x1^2', 1, NotAField), ('x1', 3, PreconditionViolated), ('x1*x2^2', 2, UnsupportedShape)],
)
def test_make_kummer_errors(f5xy: TowerField, radicand: str, exponent: int, error: type[Exception]) -> None:
    """Powers, bad exponents and mixed ramification are refused."""
    with pytest.raises(error):
        make_kummer(f5xy, parse_element(f5xy, radicand), exponent)


def test_make_kummer_of_zero(f3x: TowerField) -> None:
    """Zero has no roots to adjoin."""
    with pytest.raises(DivisionByZero):
        make_kummer(f3x, zero(f3x), 1)


def test_quadratic_extensions_split_the_quaternion_class(f3x: TowerField) -> None:
    """Every quadratic extension of a local field splits its quaternion algebra."""
    alpha = symbol([kummer_class(parse_element(f3x, 'zeta')), kummer_class(parse_element(f3x, 'x1'))])
    for radicand in ('zeta', 'x1', 'zeta*x1'):
        assert splits(alpha, make_kummer(f3x, parse_element(f3x, radicand), 1))


def test_unramified_extension_does_not_split_mixed_class(f3xy: TowerField) -> None:
    """{x1, x2} survives over GF(9)((x1))((x2))."""
    alpha = symbol([kummer_class(parse_element(f3xy, 'x1')), kummer_class(parse_element(f3xy, 'x2'))])
    assert not splits(alpha, make_unramified(f3xy, 2))


def test_cyclic_generators(f3x: TowerField, f5x: TowerField) -> None:
    """One generator per cyclic subgroup."""
    assert len(cyclic_generators(f3x, 2)) == 3
    assert len(cyclic_generators(f5x, 4)) == 6


@pytest.mark.parametrize(
    ('fixture', 'radicand', 'exponent'),
    [
        ('f3x', 'x1', 1),
        ('f3x', 'zeta*x1', 1),
        ('f5x', 'x1', 2),
        ('f5x', 'zeta*x1^3', 1),
        ('f5x', 'zeta', 1),
        ('f3xy', 'x1', 1),
        ('f3xy', 'x2', 1),
        ('f5xy', 'x1', 2),
    ],
)
def test_norm_index_divides_degree(request: pytest.FixtureRequest, fixture: str, radicand: str, exponent: int) -> None:
    """[F* : N L*] divides [L : F], with equality over local fields."""
    field: TowerField = request.getfixturevalue(fixture)
    extension = make_kummer(field, parse_element(field, radicand), exponent)
    index = full_group(field).order // norm_class_group(extension).order
    assert extension.degree % index == 0
    if field.depth == 1:
        assert index == extension.degree
