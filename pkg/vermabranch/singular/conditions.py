"""Harish-Chandra scalars of the quadratic Casimir and Condition B."""

from __future__ import annotations

import itertools
from collections.abc import Mapping, Sequence
from dataclasses import dataclass

from ..algebra.casimir import casimir_quadratic, harish_chandra_scalar
from ..algebra.embedding import Embedding
from ..algebra.exact import (
    Poly,
    Scalar,
    as_poly,
    evaluate,
    format_poly,
    format_scalar,
    is_numeric,
    primitive,
)
from ..algebra.roots import Weight, weyl_group
from ..errors import RefusalError


class ConditionBError(RefusalError):
    """Raised when two constituents share a Casimir scalar."""


@dataclass(frozen=True, slots=True)
class Linkage:
    """A pair of constituents and the equations under which they are W-linked."""

    first: Weight
    second: Weight
    equations: tuple[Poly, ...]

    @property
    def always(self) -> bool:
        return not self.equations


@dataclass(frozen=True, slots=True)
class ConditionBReport:
    weights: tuple[Weight, ...]
    scalars: tuple[Scalar, ...]
    failing_pairs: tuple[tuple[Weight, Weight], ...]
    inequalities: tuple[Poly, ...]
    linkages: tuple[Linkage, ...]

    @property
    def holds(self) -> bool:
        """Strong Condition B for generic values of the parameters."""

        return not self.failing_pairs

    @property
    def weak_holds(self) -> bool:
        return not any(link.always for link in self.linkages)

    def holds_at(self, assignment: Mapping[str, object]) -> bool:
        """Strong Condition B after substituting the given parameter values."""

        return self.holds and all(evaluate(poly, assignment) for poly in self.inequalities)

    def to_json(self) -> dict[str, object]:
        return {
            "holds": self.holds,
            "weak_holds": self.weak_holds,
            "inequalities": [f"{format_poly(p)} != 0" for p in self.inequalities],
            "failing_pairs": [[a.format(), b.format()] for a, b in self.failing_pairs],
            "linkages": [
                {
                    "pair": [link.first.format(), link.second.format()],
                    "equations": [f"{format_poly(p)} = 0" for p in link.equations],
                }
                for link in self.linkages
            ],
        }


def p1_scalar(embedding: Embedding, weight: Weight) -> Scalar:
    """Scalar of the quadratic Casimir of the source algebra on a highest weight vector."""

    source = embedding.source
    return harish_chandra_scalar(source, casimir_quadratic(source), weight)


def strong_condition_b(embedding: Embedding, weights: Sequence[Weight]) -> ConditionBReport:
    """Pairwise comparison of Casimir scalars, plus linkage under the source Weyl group.

    Symbolic differences become polynomials that must not vanish; each is split into
    primitive irreducible factors.
    """

    scalars = tuple(p1_scalar(embedding, w) for w in weights)
    failing = []
    inequalities: list[Poly] = []
    for (a, pa), (b, pb) in itertools.combinations(zip(weights, scalars, strict=True), 2):
        difference = pa - pb
        if not difference:
            failing.append((a, b))
            continue
        if is_numeric(difference):
            continue
        for factor, _ in difference.numer.factor_list()[1]:
            normalized = primitive(factor)
            if not normalized.is_ground and normalized not in inequalities:
                inequalities.append(normalized)
    linkages = []
    for a, b in itertools.combinations(weights, 2):
        linkages.extend(_linkage(embedding, a, b))
    return ConditionBReport(
        tuple(weights), scalars, tuple(failing), tuple(inequalities), tuple(linkages)
    )


def require_strong_condition_b(embedding: Embedding, weights: Sequence[Weight]) -> ConditionBReport:
    """The strong Condition B report; raises ``ConditionBError`` on the first violated pair."""

    report = strong_condition_b(embedding, weights)
    if report.failing_pairs:
        first, second = report.failing_pairs[0]
        value = report.scalars[report.weights.index(first)]
        raise ConditionBError(
            f"strong Condition B fails: p1({first.format()}) != p1({second.format()}) is violated, "
            f"both equal {format_scalar(value)}"
        )
    return report


def _linkage(embedding: Embedding, first: Weight, second: Weight) -> list[Linkage]:
    system = embedding.source.system
    rho = system.rho()
    found = []
    for element in weyl_group(system):
        gap = element.act(first + rho) - rho - second
        equations = []
        impossible = False
        for value in gap.simple:
            if not value:
                continue
            if is_numeric(value):
                impossible = True
                break
            equations.append(primitive(as_poly(value.numer)))
        if impossible:
            continue
        link = Linkage(first, second, tuple(equations))
        if link not in found:
            found.append(link)
    return found
