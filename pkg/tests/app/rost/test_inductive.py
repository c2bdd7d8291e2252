"""Test module for app/rost/inductive.py."""

import pytest
from pytest_mock import MockerFixture

from app.cohomology.classes import CohClass, symbol, zero_class
from app.constants import ExtensionKind
from app.exceptions import FieldMismatch, InternalVerificationFailed, PreconditionViolated, UnsupportedShape
from app.extensions.cyclic import make_unramified, norm, splits
from app.extensions.splitting import extension_of_character
from app.rost.inductive import InductivePairProblem, inductive_pair, kummer_norm_witness
from app.tower.classes import ClassVector, kummer_class
from app.tower.field import TowerField
from app.tower.notation import parse_element


def _symbol(field: TowerField, first: str, second: str) -> CohClass:
    return symbol([kummer_class(parse_element(field, first)), kummer_class(parse_element(field, second))])


class TestKummerNormWitness:
    """Splitting fields for elements of R(alpha) of odd valuation."""

    def test_witness_for_minus_y(self, f3xy: TowerField) -> None:
        """-y is a norm from F(sqrt(y)), which splits {x, y}."""
        alpha = _symbol(f3xy, 'x1', 'x2')
        lam = parse_element(f3xy, 'zeta*x2')
        witness = kummer_norm_witness(alpha, lam)
        assert witness.extension.kind == ExtensionKind.KUMMER
        assert witness.reduced == lam
        assert witness.norm_target == lam
        assert splits(alpha, witness.extension)
        assert norm(witness.extension, witness.mu) == witness.norm_target

    def test_norm_must_match_exactly(self, f3xy: TowerField, mocker: MockerFixture) -> None:
        """A norm in the right square class but with the wrong value is rejected."""
        square = parse_element(f3xy, '(1+x1)^2')
        mocker.patch('app.rost.inductive.norm', side_effect=lambda extension, mu: norm(extension, mu) * square)
        with pytest.raises(InternalVerificationFailed):
            kummer_norm_witness(_symbol(f3xy, 'x1', 'x2'), parse_element(f3xy, 'zeta*x2'))

    @pytest.mark.parametrize('text', ['x2', 'x2^2', 'x1'])
    def test_preconditions(self, f3xy: TowerField, text: str) -> None:
        """Ramified cup products and valuations divisible by ell are refused."""
        with pytest.raises(PreconditionViolated):
            kummer_norm_witness(_symbol(f3xy, 'x1', 'x2'), parse_element(f3xy, text))

    def test_field_mismatch(self, f3x: TowerField, f3xy: TowerField) -> None:
        """lambda must live in the field of alpha."""
        with pytest.raises(FieldMismatch):
            kummer_norm_witness(_symbol(f3xy, 'x1', 'x2'), parse_element(f3x, 'x1'))


class TestInductivePair:
    """2 beta = {zeta^2, theta} over GF(5)((x)) with coefficients mod 4."""

    def _problem(self, field: TowerField, theta: str, beta: CohClass | None = None, m: int = 1) -> InductivePairProblem:
        extension = extension_of_character(field, ClassVector(field, (2, 0)))
        assert extension is not None
        beta = _symbol(field, 'zeta', 'x1') if beta is None else beta
        return InductivePairProblem.from_extension(field, beta, extension, parse_element(field, theta), m)

    def test_ramified_theta(self, f5x: TowerField) -> None:
        """theta = x gives L = k(sqrt(-x)) and N(xi) = theta."""
        problem = self._problem(f5x, 'x1')
        pair = inductive_pair(problem)
        assert pair.ramified
        assert pair.extension.kind == ExtensionKind.KUMMER
        assert norm(pair.extension, pair.xi) == problem.theta

    def test_character(self, f5x: TowerField) -> None:
        """The character of K = k(sqrt(zeta)) is zeta^2 mod 4."""
        assert self._problem(f5x, 'x1').character == ClassVector(f5x, (2, 0))

    def test_theta_must_not_be_a_square(self, f5x: TowerField) -> None:
        """x^2 is excluded."""
        with pytest.raises(PreconditionViolated):
            self._problem(f5x, 'x1^2')

    def test_relation_must_hold(self, f5x: TowerField) -> None:
        """2 * 0 != {zeta^2, x}."""
        with pytest.raises(PreconditionViolated):
            self._problem(f5x, 'x1', beta=zero_class(f5x, 2))

    def test_m_below_n(self, f5x: TowerField) -> None:
        """m = n is excluded."""
        with pytest.raises(PreconditionViolated):
            self._problem(f5x, 'x1', m=2)

    def test_local_field_only(self, f5xy: TowerField) -> None:
        """k must have depth one."""
        with pytest.raises(PreconditionViolated):
            InductivePairProblem.from_extension(
                f5xy, zero_class(f5xy, 2), make_unramified(f5xy, 2), parse_element(f5xy, 'x1'), 1
            )

    def test_extension_over_another_field(self, f5x: TowerField, f5xy: TowerField) -> None:
        """K must be an extension of k itself."""
        with pytest.raises(PreconditionViolated):
            InductivePairProblem.from_extension(
                f5x, _symbol(f5x, 'zeta', 'x1'), make_unramified(f5xy, 2), parse_element(f5x, 'x1'), 1
            )


class TestUnramifiedInductivePair:
    """Character zeta * x^2 of order 4, whose K = k((zeta x^2)^(1/4)) has no supported presentation."""

    @pytest.fixture
    def character(self, f5x: TowerField) -> ClassVector:
        """The class (1, 2)."""
        return ClassVector(f5x, (1, 2))

    def test_extension_is_not_needed(self, f5x: TowerField, character: ClassVector) -> None:
        """The problem is stated through the character alone."""
        with pytest.raises(UnsupportedShape):
            extension_of_character(f5x, character)
        problem = InductivePairProblem(f5x, _symbol(f5x, 'zeta', 'x1'), character, parse_element(f5x, 'zeta'), 1)
        assert problem.character == character
        assert problem.n == 2

    @pytest.mark.parametrize('theta', ['zeta', 'zeta*x1^4', 'zeta*(1+x1)', 'zeta*x1^-4*(1+3*x1^2)'])
    def test_valuation_divisible_by_ell(self, f5x: TowerField, character: ClassVector, theta: str) -> None:
        """ell | v(theta) gives the unramified quadratic L with N(xi) = theta."""
        problem = InductivePairProblem(f5x, _symbol(f5x, 'zeta', 'x1'), character, parse_element(f5x, theta), 1)
        pair = inductive_pair(problem)
        assert not pair.ramified
        assert pair.extension.kind == ExtensionKind.UNRAMIFIED
        assert pair.extension.degree == f5x.ell
        assert norm(pair.extension, pair.xi) == problem.theta

    def test_character_over_another_field(self, f5x: TowerField, f5xy: TowerField) -> None:
        """The character must be a class over k."""
        with pytest.raises(PreconditionViolated):
            InductivePairProblem(
                f5x, _symbol(f5x, 'zeta', 'x1'), ClassVector(f5xy, (1, 2, 0)), parse_element(f5x, 'zeta'), 1
            )
