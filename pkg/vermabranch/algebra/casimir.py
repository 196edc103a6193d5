"""Killing form, the quadratic Casimir element and its Harish-Chandra scalar."""

from __future__ import annotations

from functools import cache

from ..errors import ConstructionError
from .exact import FIELD, QQ, Rational, Scalar, SingularMatrixError, inverse_rational
from .lie import ChevalleyAlgebra, Generator
from .roots import Weight
from .uea import UEAElement, normal_order


def killing_form(algebra: ChevalleyAlgebra, left: Generator, right: Generator) -> Rational:
    """tr(ad left . ad right) computed from the structure table."""

    total = QQ(0)
    for gen in algebra.generators:
        for middle, inner in algebra.bracket_generators(right, gen).items():
            total += inner * algebra.bracket_generators(left, middle).get(gen, QQ(0))
    return total


@cache
def casimir_quadratic(algebra: ChevalleyAlgebra) -> UEAElement:
    """Casimir element built from Killing-dual bases, in PBW normal order."""

    items: list[tuple[tuple[Generator, ...], Rational]] = []
    for gen in algebra.positive_generators:
        opposite = ("g", -gen[1])
        value = killing_form(algebra, gen, opposite)
        if not value:
            raise ConstructionError(f"Killing form vanishes on {gen} and its opposite")
        items.append(((gen, opposite), 1 / value))
        items.append(((opposite, gen), 1 / value))
    cartan = algebra.cartan_generators
    gram = [[killing_form(algebra, a, b) for b in cartan] for a in cartan]
    try:
        inverse = inverse_rational(gram)
    except SingularMatrixError as exc:
        raise ConstructionError("Killing form is degenerate on the Cartan subalgebra") from exc
    for i, a in enumerate(cartan):
        for j, b in enumerate(cartan):
            if inverse[i][j]:
                items.append(((a, b), inverse[i][j]))
    return normal_order(algebra, UEAElement.of(items))


def harish_chandra_scalar(algebra: ChevalleyAlgebra, element: UEAElement, weight: Weight) -> Scalar:
    """Scalar by which a central element acts on a highest weight vector of ``weight``."""

    ordered = normal_order(algebra, element)
    total = FIELD.zero
    for word, coeff in ordered.terms.items():
        if any(letter[0] != "h" for letter in word):
            continue
        value = coeff
        for letter in word:
            value = value * algebra.cartan_value(letter, weight)
        total += value
    return total
