"""Explicit reduced-norm witnesses.

- ``kummer_norm_witness``: for lambda of valuation prime to ell with alpha cup (lambda) unramified, the Kummer extension
  L = F((-lambda_1)^(1/ell^n)) of a valuation-one normalization lambda_1 splits alpha, and its generator mu has
  N(mu) = (-1)^(ell^n) lambda_1.
- ``inductive_pair``: over a local field k, a degree ell extension L and xi in L with theta = N(xi) and
  ell^(m-1) beta_L = (KL/L, xi).

Both re-verify their output and raise InternalVerificationFailed on a mismatch.
"""

from dataclasses import dataclass

from app.cohomology.classes import CohClass, cup, residue, symbol
from app.exceptions import FieldMismatch, InternalVerificationFailed, PreconditionViolated
from app.extensions.cyclic import (
    CyclicExtension,
    embed,
    make_kummer,
    make_unramified,
    norm,
    restrict,
    restrict_class,
    splits,
)
from app.logging.logging_config import logger
from app.tower.classes import ClassVector, kummer_class
from app.tower.element import FieldElement, constant, from_integer, mul, nth_root, power, valuation_split, variable
from app.tower.element import residue as unit_residue
from app.tower.field import TowerField


@dataclass(frozen=True)
class NormWitness:
    """A splitting field of alpha and an element whose norm is the normalized lambda up to sign."""

    extension: CyclicExtension
    mu: FieldElement
    reduced: FieldElement

    @property
    def norm_target(self) -> FieldElement:
        """(-1)^(ell^n) * reduced, the value of N(mu)."""
        field = self.reduced.field
        if field.modulus % 2:
            return mul(from_integer(field, -1), self.reduced)
        return self.reduced


def kummer_norm_witness(alpha: CohClass, lam: FieldElement) -> NormWitness:
    """Show that lambda lies in Nrd(alpha) by an explicit splitting field.

    lambda is first replaced by lambda_1 = lambda^r' * x_d^(1 - r r') with r r' = 1 mod ell^n, which has valuation 1
    and generates the same subgroup modulo ell^n-th powers.

    Args:
        alpha: Degree-2 class over a field of depth >= 1.
        lam: Element of valuation prime to ell with alpha cup (lambda) unramified.

    Returns:
        The extension, mu and lambda_1.

    Raises:
        FieldMismatch: If lambda is not in the field of alpha.
        PreconditionViolated: If a hypothesis fails.
        InternalVerificationFailed: If the constructed witness does not check out.
    """
    field = alpha.field
    if lam.field != field:
        raise FieldMismatch(f'{lam.field} is not {field}')
    if alpha.degree != 2 or field.depth == 0 or lam.is_zero:
        raise PreconditionViolated('need a degree 2 class over a field of depth >= 1 and a nonzero lambda')
    valuation, _ = valuation_split(lam)
    if valuation % field.ell == 0:
        raise PreconditionViolated(f'valuation {valuation} of lambda is divisible by {field.ell}')
    if not residue(cup(alpha, kummer_class(lam))).is_zero:
        raise PreconditionViolated('alpha cup (lambda) is ramified')

    inverse = pow(valuation, -1, field.modulus)
    reduced = mul(power(lam, inverse), power(variable(field, field.depth), 1 - valuation * inverse))
    extension = make_kummer(field, -reduced, field.n)
    assert extension.generator is not None  # noqa: S101
    witness = NormWitness(extension, extension.generator, reduced)
    _verify_witness(alpha, witness)
    return witness


def _verify_witness(alpha: CohClass, witness: NormWitness) -> None:
    extension = witness.extension
    value = norm(extension, witness.mu)
    target = witness.norm_target
    if value != target or not splits(alpha, extension):
        logger.error('Norm witness failed for {} over {}', alpha.describe(), extension.describe())
        raise InternalVerificationFailed('splitting field or norm of the Kummer generator is wrong')


@dataclass(frozen=True)
class InductivePairProblem:
    """beta over a local field k with 0 != ell^m beta = (K/k, theta).

    K enters only through its character, the class a with (K/k, -) = {a, -}. K itself is never built.
    """

    field: TowerField
    beta: CohClass
    character: ClassVector
    theta: FieldElement
    m: int

    def __post_init__(self) -> None:
        """Check the hypotheses.

        Raises:
            PreconditionViolated: Naming the hypothesis that fails.
        """
        _check_shapes(self)
        _check_relation(self)

    @classmethod
    def from_extension(
        cls, field: TowerField, beta: CohClass, extension: CyclicExtension, theta: FieldElement, m: int
    ) -> 'InductivePairProblem':
        """Problem for a cyclic extension K with a Kummer presentation.

        Args:
            field: The local field k.
            beta: Degree-2 class over k.
            extension: The extension K/k.
            theta: Nonzero element of k.
            m: Exponent with 1 <= m < n.

        Returns:
            The problem with the character of K.

        Raises:
            PreconditionViolated: If K is not over k or has no radicand.
        """
        if extension.base != field:
            raise PreconditionViolated('K must be an extension of k')
        character = extension.character_class
        if character is None:
            raise PreconditionViolated('K has no Kummer presentation')
        return cls(field, beta, character, theta, m)

    @property
    def n(self) -> int:
        """The exponent n of the coefficients."""
        return self.field.n


def _check_shapes(problem: InductivePairProblem) -> None:
    field = problem.field
    if field.depth != 1:
        raise PreconditionViolated(f'k must be a local field (depth 1) for cd = 2, got depth {field.depth}')
    if problem.beta.field != field or problem.beta.degree != 2:
        raise PreconditionViolated('beta must be a degree 2 class over k')
    if not 1 <= problem.m < field.n:
        raise PreconditionViolated(f'need 1 <= m < n, got m={problem.m}, n={field.n}')
    if problem.character.field != field:
        raise PreconditionViolated('the character of K must be a class over k')
    if problem.theta.field != field or problem.theta.is_zero:
        raise PreconditionViolated('theta must be a nonzero element of k')


def _check_relation(problem: InductivePairProblem) -> None:
    field = problem.field
    theta_class = kummer_class(problem.theta)
    if not any(value % field.ell for value in theta_class.exponents):
        raise PreconditionViolated(f'theta is an {field.ell}-th power')
    relation = symbol([problem.character, theta_class])
    if relation.is_zero or (field.ell**problem.m) * problem.beta != relation:
        raise PreconditionViolated('ell^m beta must equal the nonzero class (K/k, theta)')


@dataclass(frozen=True)
class InductivePair:
    """L/k of degree ell and xi in L solving both norm equations."""

    extension: CyclicExtension
    xi: FieldElement
    ramified: bool


def inductive_pair(problem: InductivePairProblem) -> InductivePair:
    """Build (L, xi) with theta = N(xi) and ell^(m-1) beta_L = (KL/L, xi).

    If v(theta) is prime to ell, L = k((-theta)^(1/ell)) and xi = -(-theta)^(1/ell). Otherwise L is the unramified
    extension of degree ell, xi = xi_1 * rho_1 * x^s with xi_1 a constant of the residue field found by discrete logs
    and rho_1 an ell-th root of the one-unit theta_0 / N(xi_1).

    Raises:
        InternalVerificationFailed: If the pair fails its own check.
    """
    valuation, _ = valuation_split(problem.theta)
    pair = _ramified_pair(problem) if valuation % problem.field.ell else _unramified_pair(problem)
    _verify_pair(problem, pair)
    logger.debug('Inductive pair over {} ({})', pair.extension.tower, 'ramified' if pair.ramified else 'unramified')
    return pair


def _ramified_pair(problem: InductivePairProblem) -> InductivePair:
    extension = make_kummer(problem.field, -problem.theta, 1)
    assert extension.generator is not None  # noqa: S101
    return InductivePair(extension, -extension.generator, True)


def _target(problem: InductivePairProblem, extension: CyclicExtension) -> CohClass:
    return (problem.field.ell ** (problem.m - 1)) * restrict(problem.beta, extension)


def _unramified_pair(problem: InductivePairProblem) -> InductivePair:
    field = problem.field
    extension = make_unramified(field, field.ell)
    top = extension.tower
    valuation, unit = valuation_split(problem.theta)
    shift = valuation // field.ell
    target = _target(problem, extension)
    character = restrict_class(extension, problem.character)

    # N(G^t) = g^(t / kappa) for the generator G of the residue field of L
    index = (top.q - 1) // (field.q - 1)
    kappa = extension.embedding_log // index
    start = (field.constants.log(unit_residue(unit).unit[0]) * kappa) % (field.q - 1)
    for step in range(index):
        exponent = start + (field.q - 1) * step
        if symbol([character, ClassVector(top, (exponent, shift))]) != target:
            continue
        leading = constant(top, top.constants.exp(exponent))
        one_unit = mul(unit, norm(extension, leading) ** -1)
        correction = embed(extension, nth_root(one_unit, field.ell))
        xi = mul(mul(leading, correction), power(variable(top, 1), shift))
        return InductivePair(extension, xi, False)
    raise InternalVerificationFailed('no residue-field solution of the class equation')


def _verify_pair(problem: InductivePairProblem, pair: InductivePair) -> None:
    extension = pair.extension
    if norm(extension, pair.xi) != problem.theta:
        logger.error('Inductive pair norm mismatch over {}', extension.tower)
        raise InternalVerificationFailed('N(xi) != theta')
    expected = _target(problem, extension)
    actual = symbol([restrict_class(extension, problem.character), kummer_class(pair.xi)])
    if actual != expected:
        logger.error('Inductive pair class mismatch: {} != {}', actual.describe(), expected.describe())
        raise InternalVerificationFailed('ell^(m-1) beta_L != (KL/L, xi)')
