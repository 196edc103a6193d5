"""Shapovalov-type norms tau(u) u . v_lambda and their rational roots."""

from __future__ import annotations

from dataclasses import dataclass

from ..algebra.embedding import Embedding
from ..algebra.exact import (
    RING,
    VARIABLES,
    Poly,
    Rational,
    format_poly,
    primitive,
    variables_of,
)
from ..algebra.uea import UEAElement, transpose
from ..branching.verma import GeneralizedVerma
from ..errors import UsageError


@dataclass(frozen=True, slots=True)
class ShapovalovCertificate:
    poly: Poly
    variable: str | None
    roots: tuple[Rational, ...]

    def to_json(self) -> dict[str, object]:
        return {
            "poly": format_poly(self.poly),
            "variable": self.variable,
            "roots": [str(r) for r in self.roots],
        }


def transpose_antiautomorphism(element: UEAElement) -> UEAElement:
    return transpose(element)


def shapovalov_certificate(
    verma: GeneralizedVerma, element: UEAElement, embedding: Embedding | None = None
) -> ShapovalovCertificate:
    """Coefficient of v_lambda in tau(u) u . v_lambda, normalized, with its rational roots.

    With an embedding, ``element`` only needs a single weight for the smaller Cartan
    subalgebra; terms of other ambient weights do not reach v_lambda.
    """

    weights = element.weights(verma.algebra)
    if embedding is not None:
        weights = {embedding.pr_root(w) for w in weights}
    if len(weights) > 1:
        raise UsageError("certificate needs an element of a single weight")
    image = verma.act(transpose(element) * element, verma.highest_vector())
    value = image.terms.get(((), verma.top_index), RING.zero)
    poly = primitive(value)
    names = variables_of(poly)
    if len(names) != 1:
        return ShapovalovCertificate(poly, None, ())
    index = VARIABLES.index(names[0])
    roots = []
    for factor, _ in poly.factor_list()[1]:
        if factor.degree(index) != 1 or len(variables_of(factor)) != 1:
            continue
        slope = factor.coeff(RING.gens[index])
        constant = factor.coeff(1)
        roots.append(-constant / slope)
    return ShapovalovCertificate(poly, names[0], tuple(sorted(set(roots))))
