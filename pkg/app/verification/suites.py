"""The verification suites.

Each suite lists its cells (an id and a picklable payload) for a scope and checks one cell at a time, so cells can
run in worker processes. A check returns a status and a JSON-ready detail dictionary.
"""

from collections.abc import Callable
from dataclasses import dataclass
from typing import Any

from app.albert.checks import check_albert_class
from app.albert.forms import isotropic, symbol_pairs
from app.cohomology.classes import (
    CohClass,
    basis_keys,
    cup,
    degree_one,
    from_vector,
    inflate,
    residue,
    specialize,
    symbol,
    torsion_classes,
)
from app.cohomology.classes import basis_class as basis_symbol
from app.cohomology.decomposition import top_class
from app.constants import MAX_DEGREE, ReportStatus, SuiteName
from app.exceptions import ConfigError
from app.extensions.splitting import brauer_index
from app.rost.inductive import InductivePairProblem, inductive_pair, kummer_norm_witness
from app.rost.kernels import rost_kernel, unit_description, unit_part
from app.rost.norm_conditions import norm_intersection_condition
from app.rost.report import quotient_report
from app.rost.suslin import (
    BoundedGroup,
    nrd_norm_span,
    period_ell_suslin_group,
    quaternion_norm_sampling,
    suslin_group,
    valuation_one_kernel_class,
)
from app.tower.classes import ClassVector, all_classes, basis_class, class_representative, kummer_class
from app.tower.element import FieldElement, add, mul, neg, one, power, valuation_split
from app.tower.element import residue as unit_residue
from app.tower.field import TowerField
from app.tower.notation import format_element
from app.tower.sampling import random_element, random_one_unit
from app.utils import canonical_json, make_rng
from app.verification.scope import SuiteScope

Payload = tuple[Any, ...]
Outcome = tuple[ReportStatus, dict[str, Any]]

SAMPLE_CHUNK = 500
INDUCTIVE_PROBLEMS = 100
QUATERNION_SAMPLES = 1000


@dataclass(frozen=True)
class Suite:
    """A named family of checks."""

    name: SuiteName
    default_scope: SuiteScope
    cells: Callable[[SuiteScope], list[tuple[str, Payload]]]
    check: Callable[[SuiteScope, Payload], Outcome]


def _verdict(problems: list[Any], detail: dict[str, Any] | None = None) -> Outcome:
    if problems:
        return ReportStatus.COUNTEREXAMPLE, {**(detail or {}), 'problems': problems}
    return ReportStatus.VERIFIED, detail or {}


def _require_depth(field: TowerField, minimum: int) -> None:
    if field.depth < minimum:
        raise ConfigError(f'this suite needs depth >= {minimum}, got {field.depth}')


def _alpha_cells(scope: SuiteScope, order: int, nonzero: bool = False) -> list[tuple[str, Payload]]:
    field = scope.tower()
    alphas = (alpha for alpha in torsion_classes(field, 2, order) if not (nonzero and alpha.is_zero))
    return [(canonical_json(alpha.describe()), tuple(alpha.vector())) for alpha in alphas]


def _alpha(scope: SuiteScope, payload: Payload) -> CohClass:
    return from_vector(scope.tower(), 2, payload)


def _sample_cells(scope: SuiteScope) -> list[tuple[str, Payload]]:
    chunks = -(-scope.samples // SAMPLE_CHUNK)
    return [
        (f'chunk-{chunk}', (chunk, min(SAMPLE_CHUNK, scope.samples - chunk * SAMPLE_CHUNK))) for chunk in range(chunks)
    ]


# steinberg


def symbol_identity_failures(a: FieldElement, b: FieldElement, c: FieldElement) -> list[str]:
    """Names of the symbol identities violated by a, b, c."""
    first, second, third = kummer_class(a), kummer_class(b), kummer_class(c)
    failed = []
    complement = add(one(a.field), neg(a))
    if not complement.is_zero and not symbol([first, kummer_class(complement)]).is_zero:
        failed.append('steinberg')
    if symbol([kummer_class(mul(a, b)), third]) != symbol([first, third]) + symbol([second, third]):
        failed.append('bilinear')
    if symbol([first, second]) != -symbol([second, first]):
        failed.append('antisymmetric')
    if not symbol([first, kummer_class(neg(a))]).is_zero:
        failed.append('a,-a')
    return failed


def _check_steinberg(scope: SuiteScope, payload: Payload) -> Outcome:
    chunk, count = payload
    field = scope.tower()
    rng = make_rng(scope.seed, chunk)
    problems = []
    for _ in range(count):
        a, b, c = (random_element(field, rng) for _ in range(3))
        failed = symbol_identity_failures(a, b, c)
        if failed:
            problems.append({'a': format_element(a), 'b': format_element(b), 'c': format_element(c), 'failed': failed})
    return _verdict(problems, {'samples': count})


# exact-sequence


def _exact_sequence_cells(scope: SuiteScope) -> list[tuple[str, Payload]]:
    field = scope.tower()
    _require_depth(field, 1)
    return [(f'degree-{degree}', (degree,)) for degree in range(2, min(MAX_DEGREE, field.depth + 1) + 1)]


def _check_exact_sequence(scope: SuiteScope, payload: Payload) -> Outcome:
    (degree,) = payload
    field = scope.tower()
    lower = field.residue_field()
    problems = []
    for key in basis_keys(lower.depth, degree):
        if not residue(inflate(basis_symbol(lower, degree, key), field)).is_zero:
            problems.append({'inflated_residue_nonzero': list(key)})
    for key in basis_keys(field.depth, degree):
        symbol_class = basis_symbol(field, degree, key)
        if residue(symbol_class).is_zero and inflate(specialize(symbol_class), field) != symbol_class:
            problems.append({'kernel_not_inflated': list(key)})
    for key in basis_keys(lower.depth, degree - 1):
        target = basis_symbol(lower, degree - 1, key)
        if residue(cup(inflate(target, field), top_class(field))) != target:
            problems.append({'not_hit': list(key)})
    return _verdict(problems)


# residue-formulas


def tame_symbol(a: FieldElement, b: FieldElement) -> FieldElement:
    """Residue of (-1)^(v(a)v(b)) a^v(b) / b^v(a), the residue of the symbol {a, b}."""
    valuation_a, unit_a = valuation_split(a)
    valuation_b, unit_b = valuation_split(b)
    value = mul(power(unit_a, valuation_b), power(unit_b, -valuation_a))
    if (valuation_a * valuation_b) % 2:
        value = neg(value)
    return unit_residue(value)


def _check_residue_formulas(scope: SuiteScope, payload: Payload) -> Outcome:
    chunk, count = payload
    field = scope.tower()
    _require_depth(field, 1)
    lower = field.residue_field()
    rng = make_rng(scope.seed, chunk)
    problems = []
    for _ in range(count):
        a, b, lam = (random_element(field, rng) for _ in range(3))
        expected = degree_one(kummer_class(tame_symbol(a, b)))
        if residue(symbol([kummer_class(a), kummer_class(b)])) != expected:
            problems.append({'a': format_element(a), 'b': format_element(b), 'formula': 'tame'})
        character = ClassVector(lower, tuple(int(value) for value in rng.integers(0, field.modulus, lower.rank)))
        valuation, _ = valuation_split(lam)
        if residue(cup(inflate(degree_one(character), field), kummer_class(lam))) != degree_one(valuation * character):
            problems.append({'character': list(character.exponents), 'lambda': format_element(lam), 'formula': 'cup'})
    return _verdict(problems, {'samples': count})


# rost-div-l, quotient-formula, period-powers


def _period_ell_cells(scope: SuiteScope) -> list[tuple[str, Payload]]:
    return _alpha_cells(scope, scope.ell)


def _check_report(scope: SuiteScope, payload: Payload) -> Outcome:
    report = quotient_report(_alpha(scope, payload))
    if report.status == ReportStatus.VERIFIED:
        return ReportStatus.VERIFIED, {'quotient_order': report.quotient_order}
    return report.status, report.to_json()


def _quotient_cells(scope: SuiteScope) -> list[tuple[str, Payload]]:
    _require_depth(scope.tower(), 1)
    return _alpha_cells(scope, scope.ell, nonzero=True)


def _check_quotient(scope: SuiteScope, payload: Payload) -> Outcome:
    report = quotient_report(_alpha(scope, payload))
    detail = {'quotient_order': report.quotient_order, 'rhs_order': report.rhs_order}
    if report.rhs_order == report.quotient_order:
        return ReportStatus.VERIFIED, detail
    return ReportStatus.COUNTEREXAMPLE, detail


def _all_period_cells(scope: SuiteScope) -> list[tuple[str, Payload]]:
    return _alpha_cells(scope, scope.tower().modulus)


def suslin_containment_failures(alpha: CohClass, suslin: BoundedGroup) -> list[str]:
    """Violations of S(ell alpha)^ell <= S(alpha) <= S(ell alpha) and S((ell + 1) alpha) = S(alpha)."""
    field = alpha.field
    failed = []
    inner = suslin_group(field.ell * alpha)
    if not inner.group.scaled(field.ell).issubset(suslin.group):
        failed.append('S(ell alpha)^ell not in S(alpha)')
    if inner.is_exact and not suslin.group.issubset(inner.group):
        failed.append('S(alpha) not in S(ell alpha)')
    twisted = suslin_group((field.ell + 1) * alpha)
    if twisted.is_exact and suslin.is_exact and twisted.group != suslin.group:
        failed.append('S(t alpha) != S(alpha)')
    return failed


def _check_period_power(scope: SuiteScope, payload: Payload) -> Outcome:
    alpha = _alpha(scope, payload)
    report = quotient_report(alpha)
    failed = suslin_containment_failures(alpha, suslin_group(alpha))
    if failed:
        return ReportStatus.COUNTEREXAMPLE, {**report.to_json(), 'problems': failed}
    if report.status == ReportStatus.VERIFIED:
        return ReportStatus.VERIFIED, {'period': report.period}
    return report.status, report.to_json()


# inductive-pairs


def inductive_candidates(field: TowerField) -> list[tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...], int]]:
    """All (a, theta, beta, m) with theta not an ell-th power and 0 != ell^m beta = {a, theta}, as exponent tuples."""
    ell = field.ell
    candidates = []
    for m in range(1, field.n):
        for a in all_classes(field):
            for theta in all_classes(field):
                if not any(value % ell for value in theta.exponents):
                    continue
                relation = symbol([a, theta])
                if relation.is_zero:
                    continue
                candidates.extend(
                    (a.exponents, theta.exponents, tuple(beta.vector()), m)
                    for beta in torsion_classes(field, 2, field.modulus)
                    if (ell**m) * beta == relation
                )
    return candidates


def _inductive_cells(scope: SuiteScope) -> list[tuple[str, Payload]]:
    field = scope.tower(depth=1)
    if field.n < 2:
        raise ConfigError(f'inductive pairs need n >= 2, got n={field.n}')
    candidates = inductive_candidates(field)
    if not candidates:
        raise ConfigError(f'no inductive problems over {field}')
    # past the first pass, candidates repeat with fresh one-unit tails on theta
    order = [int(index) for index in make_rng(scope.seed).permutation(len(candidates))]
    count = min(INDUCTIVE_PROBLEMS, scope.samples)
    return [(f'problem-{cell}', (*candidates[order[cell % len(order)]], cell)) for cell in range(count)]


def _check_inductive(scope: SuiteScope, payload: Payload) -> Outcome:
    a_exponents, theta_exponents, beta_vector, m, index = payload
    field = scope.tower(depth=1)
    character = ClassVector(field, a_exponents)
    tail = random_one_unit(field, make_rng(scope.seed, index))
    theta = mul(class_representative(ClassVector(field, theta_exponents)), tail)
    problem = InductivePairProblem(field, from_vector(field, 2, beta_vector), character, theta, m)
    pair = inductive_pair(problem)
    return ReportStatus.VERIFIED, {'ramified': pair.ramified, 'theta': format_element(theta)}


# norm-witnesses


def _witness_cells(scope: SuiteScope) -> list[tuple[str, Payload]]:
    _require_depth(scope.tower(), 1)
    return _alpha_cells(scope, scope.ell)


def _check_witnesses(scope: SuiteScope, payload: Payload) -> Outcome:
    alpha = _alpha(scope, payload)
    ell = alpha.field.ell
    rost = rost_kernel(alpha)
    lower = nrd_norm_span(alpha)
    problems: list[Any] = [
        {'not_a_norm': list(vector.exponents)}
        for vector in rost.elements()
        if vector.exponents[-1] % ell and not lower.contains(vector)
    ]
    if rost != suslin_group(alpha).group.join(unit_part(rost)):
        problems.append('R != S * (R cap U)')
    if residue(alpha).is_zero and rost != unit_description(rost, alpha.period):
        problems.append('R is not generated by its unit part and powers')
    witness_class = valuation_one_kernel_class(alpha)
    if witness_class is not None:
        kummer_norm_witness(alpha, class_representative(witness_class))
    return _verdict(problems)


# albert-forms


def _albert_cells(scope: SuiteScope) -> list[tuple[str, Payload]]:
    field = scope.tower()
    if field.ell != 2 or field.n != 1:
        raise ConfigError('Albert forms need ell = 2 and n = 1')
    cells = _alpha_cells(scope, 2)
    return [(cell, payload) for cell, payload in cells if len(symbol_pairs(from_vector(field, 2, payload))) <= 2]


def _check_albert(scope: SuiteScope, payload: Payload) -> Outcome:
    alpha = _alpha(scope, payload)
    result = check_albert_class(alpha)
    problems = [] if result.holds else [result.to_json()]
    if isotropic(result.form) != (brauer_index(alpha) <= 2):
        problems.append('Albert form isotropy does not match the index')
    return _verdict(problems)


# norm-intersection


def _condition_cells(scope: SuiteScope) -> list[tuple[str, Payload]]:
    field = scope.tower()
    if field.depth > 1:
        raise ConfigError(f'the norm condition is checked over depth <= 1, got depth {field.depth}')
    vectors = [vector.exponents for vector in all_classes(field, field.ell) if not vector.is_zero]
    singles = [(vector,) for vector in vectors]
    pairs = [(first, second) for index, first in enumerate(vectors) for second in vectors[index + 1 :]]
    return [(canonical_json([list(vector) for vector in cell]), cell) for cell in singles + pairs]


def _check_condition(scope: SuiteScope, payload: Payload) -> Outcome:
    field = scope.tower()
    generators = [class_representative(ClassVector(field, vector)) for vector in payload]
    condition = norm_intersection_condition(field, generators)
    detail = {'holds': condition.holds, 'lhs': condition.lhs.describe(), 'rhs': condition.rhs.describe()}
    if not condition.holds and (len(generators) == 1 or field.depth == 0):
        return ReportStatus.COUNTEREXAMPLE, detail
    return ReportStatus.VERIFIED, detail


# dual-path


def _dual_path_cells(scope: SuiteScope) -> list[tuple[str, Payload]]:
    _require_depth(scope.tower(), 2)
    cells = _alpha_cells(scope, scope.ell, nonzero=True)
    if scope.ell == 2 and scope.n == 1:
        cells.append(('quaternion-norms', ()))
    return cells


def _check_dual_path(scope: SuiteScope, payload: Payload) -> Outcome:
    if not payload:
        return _check_quaternion_norms(scope)
    alpha = _alpha(scope, payload)
    if brauer_index(alpha) != alpha.field.ell:
        return ReportStatus.INCONCLUSIVE, {'index': brauer_index(alpha)}
    norms = nrd_norm_span(alpha)
    formula = period_ell_suslin_group(alpha)
    if norms == formula:
        return ReportStatus.VERIFIED, {}
    return ReportStatus.COUNTEREXAMPLE, {'norm_span': norms.describe(), 'formula': formula.describe()}


def _check_quaternion_norms(scope: SuiteScope) -> Outcome:
    field = scope.tower(depth=1)
    samples = min(scope.samples, QUATERNION_SAMPLES)
    hits = quaternion_norm_sampling(field, basis_class(field, 0), basis_class(field, 1), samples, scope.seed)
    detail = {'samples': samples, 'classes_hit': [list(vector.exponents) for vector in hits]}
    if len(hits) == field.modulus**field.rank:
        return ReportStatus.VERIFIED, detail
    return ReportStatus.INCONCLUSIVE, detail


_LOCAL = SuiteScope(q=3, ell=2, n=1, depth=1)
_TWO_LOCAL = SuiteScope(q=3, ell=2, n=1, depth=2)
_QUARTIC = SuiteScope(q=5, ell=2, n=2, depth=2)

SUITES: dict[SuiteName, Suite] = {
    suite.name: suite
    for suite in (
        Suite(SuiteName.STEINBERG, _TWO_LOCAL, _sample_cells, _check_steinberg),
        Suite(SuiteName.EXACT_SEQUENCE, _TWO_LOCAL, _exact_sequence_cells, _check_exact_sequence),
        Suite(SuiteName.RESIDUE_FORMULAS, SuiteScope(samples=1000), _sample_cells, _check_residue_formulas),
        Suite(SuiteName.ROST_DIV_L, _TWO_LOCAL, _period_ell_cells, _check_report),
        Suite(SuiteName.PERIOD_POWERS, _QUARTIC, _all_period_cells, _check_period_power),
        Suite(SuiteName.QUOTIENT_FORMULA, _TWO_LOCAL, _quotient_cells, _check_quotient),
        Suite(SuiteName.INDUCTIVE_PAIRS, SuiteScope(q=5, ell=2, n=2, depth=1), _inductive_cells, _check_inductive),
        Suite(SuiteName.NORM_WITNESSES, _TWO_LOCAL, _witness_cells, _check_witnesses),
        Suite(SuiteName.ALBERT_FORMS, _TWO_LOCAL, _albert_cells, _check_albert),
        Suite(SuiteName.NORM_INTERSECTION, _LOCAL, _condition_cells, _check_condition),
        Suite(SuiteName.DUAL_PATH, _TWO_LOCAL, _dual_path_cells, _check_dual_path),
    )
}
