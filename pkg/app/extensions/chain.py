"""Towers of cyclic extensions F = L_0 < L_1 < ... < L_r, used for composita."""

from collections.abc import Sequence
from dataclasses import dataclass
from math import prod

from app.cohomology.classes import CohClass
from app.exceptions import FieldMismatch, NotAField
from app.extensions.cyclic import (
    CyclicExtension,
    embed,
    make_kummer,
    norm,
    norm_class,
    restrict,
    restrict_class,
)
from app.logging.logging_config import logger
from app.tower.classes import ClassVector, basis_class
from app.tower.element import FieldElement, nth_root
from app.tower.field import TowerField
from app.tower.subgroup import Subgroup, span


@dataclass(frozen=True)
class ExtensionChain:
    """Each step is a cyclic extension of the standardized tower of the previous one."""

    base: TowerField
    steps: tuple[CyclicExtension, ...] = ()

    def __post_init__(self) -> None:
        """Check that the steps compose.

        Raises:
            FieldMismatch: If a step is not built over the previous top field.
        """
        current = self.base
        for step in self.steps:
            if step.base != current:
                raise FieldMismatch(f'chain step over {step.base} does not continue {current}')
            current = step.tower

    @property
    def top(self) -> TowerField:
        """The last field of the chain."""
        return self.steps[-1].tower if self.steps else self.base

    @property
    def degree(self) -> int:
        """[top : base]."""
        return prod(step.degree for step in self.steps)

    def embed(self, element: FieldElement) -> FieldElement:
        """Image of a base element in the top field."""
        for step in self.steps:
            element = embed(step, element)
        return element

    def norm(self, element: FieldElement) -> FieldElement:
        """Norm from the top field to the base, one step at a time."""
        for step in reversed(self.steps):
            element = norm(step, element)
        return element

    def restrict_class(self, vector: ClassVector) -> ClassVector:
        """Image of a base class in the top field."""
        for step in self.steps:
            vector = restrict_class(step, vector)
        return vector

    def norm_class(self, vector: ClassVector) -> ClassVector:
        """Class of the norm of a top-field element of the given class."""
        for step in reversed(self.steps):
            vector = norm_class(step, vector)
        return vector

    def norm_class_group(self) -> Subgroup:
        """Image of the norm from the top field in the class group of the base."""
        top = self.top
        return span(self.base, [self.norm_class(basis_class(top, index)) for index in range(top.rank)])

    def restrict(self, cohomology_class: CohClass) -> CohClass:
        """Restriction of a base class to the top field."""
        for step in self.steps:
            cohomology_class = restrict(cohomology_class, step)
        return cohomology_class

    def splits(self, alpha: CohClass) -> bool:
        """Whether alpha vanishes on the top field."""
        return self.restrict(alpha).is_zero


def adjoin(chain: ExtensionChain, radicand: FieldElement, exponent: int) -> ExtensionChain:
    """Adjoin an ell^exponent-th root of a base element to the top of the chain.

    Powers are peeled off first, so the new step has the degree of the extension actually generated; when the radicand
    is already an ell^exponent-th power the chain is returned unchanged.

    Args:
        chain: The chain to extend.
        radicand: Nonzero element of the base field.
        exponent: m with 1 <= m <= n.

    Returns:
        The extended chain.

    Raises:
        FieldMismatch: If the radicand is not in the base field.
    """
    if radicand.field != chain.base:
        raise FieldMismatch(f'{radicand.field} is not the base of the chain')
    top = chain.top
    element = chain.embed(radicand)
    while exponent > 0:
        try:
            step = make_kummer(top, element, exponent)
        except NotAField:
            element = nth_root(element, top.ell)
            exponent -= 1
            continue
        return ExtensionChain(chain.base, (*chain.steps, step))
    logger.debug('Radicand is already a power over {}, chain unchanged', top)
    return chain


def compositum(base: TowerField, radicands: Sequence[FieldElement], exponent: int = 1) -> ExtensionChain:
    """The compositum of the Kummer extensions F(b_i^(1/ell^exponent)) as a chain.

    Raises:
        UnsupportedShape: If some step leaves the supported shapes.
    """
    chain = ExtensionChain(base)
    for radicand in radicands:
        chain = adjoin(chain, radicand, exponent)
    return chain

