"""Cones of weights and the conditions deciding discrete branching.

Feasibility of linear inequalities is decided by Fourier-Motzkin elimination over the
rationals; a feasible system also yields a witness by back substitution.
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Sequence
from dataclasses import dataclass

import structlog

from ..algebra.embedding import Embedding
from ..algebra.exact import QQ, Rational
from ..errors import ConstructionError
from .parabolic import ParabolicSubalgebra, induced_bar_parabolic

LOG = structlog.get_logger(__name__)

Vector = tuple[Rational, ...]
Inequality = tuple[Vector, Rational]


@dataclass(frozen=True, slots=True)
class ConeReport:
    """Weights of n_-/i(bar n_-) and the cone conditions derived from them.

    Weights are in simple-root coordinates of the source algebra.
    """

    quotient_weights: tuple[Vector, ...]
    nilradical_weights: tuple[Vector, ...]
    bar_nilradical_weights: tuple[Vector, ...]
    zero_in_c: bool
    zero_in_c_prime: bool
    weakly_compatible: bool
    compatible: bool

    @property
    def condition_a(self) -> bool:
        return self.zero_in_c or not self.zero_in_c_prime

    @property
    def finite_branching(self) -> bool:
        return not self.quotient_weights

    def to_json(self) -> dict[str, object]:
        return {
            "quotient_weights": [[str(c) for c in w] for w in self.quotient_weights],
            "zero_in_c": self.zero_in_c,
            "zero_in_c_prime": self.zero_in_c_prime,
            "condition_a": self.condition_a,
            "weakly_compatible": self.weakly_compatible,
            "compatible": self.compatible,
            "finite_branching": self.finite_branching,
        }


def solve_inequalities(rows: Sequence[Inequality], dimension: int) -> Vector | None:
    """A point y with ``a . y >= b`` for every row ``(a, b)``, or None if infeasible."""

    current = _dedupe(rows)
    if current is None:
        return None
    stages: list[tuple[int, list[Inequality]]] = []
    for variable in reversed(range(dimension)):
        stages.append((variable, current))
        lower = [r for r in current if r[0][variable] > 0]
        upper = [r for r in current if r[0][variable] < 0]
        combined = [r for r in current if r[0][variable] == 0]
        for a, b in lower:
            for c, d in upper:
                scale_a, scale_c = -c[variable], a[variable]
                coeffs = tuple(scale_a * x + scale_c * y for x, y in zip(a, c, strict=True))
                combined.append((coeffs, scale_a * b + scale_c * d))
        reduced = _dedupe(combined)
        if reduced is None:
            return None
        current = reduced
    point = [QQ(0)] * dimension
    for variable, system in reversed(stages):
        low: Rational | None = None
        high: Rational | None = None
        for coeffs, bound in system:
            pivot = coeffs[variable]
            if not pivot:
                continue
            rest = sum((coeffs[u] * point[u] for u in range(variable)), QQ(0))
            value = (bound - rest) / pivot
            if pivot > 0:
                low = value if low is None else max(low, value)
            else:
                high = value if high is None else min(high, value)
        choice = QQ(0)
        if low is not None and choice < low:
            choice = low
        if high is not None and choice > high:
            choice = high
        point[variable] = choice
    return tuple(point)


def separating_functional(vectors: Sequence[Sequence[Rational]]) -> Vector | None:
    """A functional h with h(x) >= 1 on every vector, or None when none exists."""

    if not vectors:
        return None
    dimension = len(vectors[0])
    return solve_inequalities([(tuple(QQ(c) for c in x), QQ(1)) for x in vectors], dimension)


def zero_in_cone(vectors: Sequence[Sequence[Rational]]) -> bool:
    """Whether a nontrivial nonnegative combination of the vectors vanishes.

    By Gordan's alternative this happens exactly when no functional is positive on all of
    them; the empty set only spans the trivial cone.
    """

    if not vectors:
        return False
    return separating_functional(vectors) is None


def quotient_weights(parabolic: ParabolicSubalgebra, embedding: Embedding) -> ConeReport:
    """Weights of n_- / i(bar n_-) and the cone conditions for the pair."""

    target = embedding.target.system
    bar = induced_bar_parabolic(parabolic, embedding)
    source = embedding.source.system
    nil = [embedding.pr_root(target.positive_roots[k - 1]) for k in parabolic.nilradical_roots]
    bar_nil = [tuple(QQ(c) for c in source.positive_roots[k - 1]) for k in bar.nilradical_roots]
    remaining = Counter(tuple(-c for c in w) for w in nil)
    for weight in bar_nil:
        key = tuple(-c for c in weight)
        if not remaining[key]:
            raise ConstructionError(f"bar nilradical weight {key} is missing from pr(n_-)")
        remaining[key] -= 1
    quotient = tuple(sorted(remaining.elements(), key=_weight_order))
    negative_nil = [tuple(-c for c in w) for w in nil]
    report = ConeReport(
        quotient_weights=quotient,
        nilradical_weights=tuple(nil),
        bar_nilradical_weights=tuple(bar_nil),
        zero_in_c=zero_in_cone(quotient),
        zero_in_c_prime=zero_in_cone(negative_nil),
        weakly_compatible=_weakly_compatible(embedding, nil, bar_nil),
        compatible=_compatible(embedding, parabolic, nil),
    )
    LOG.info(
        "cone conditions",
        parabolic=parabolic.label,
        quotient=len(quotient),
        condition_a=report.condition_a,
    )
    return report


def _evaluation_rows(embedding: Embedding, weight: Vector) -> Vector:
    # value of a source weight on sum_j y_j hbar_j is (F weight)_j . y
    form = embedding.source.system.form
    size = len(weight)
    return tuple(sum((form[j][i] * weight[i] for i in range(size)), QQ(0)) for j in range(size))


def _weakly_compatible(embedding: Embedding, nil: Sequence[Vector], bar_nil: Sequence[Vector]) -> bool:
    rows = [(_evaluation_rows(embedding, w), QQ(1)) for w in bar_nil]
    rows += [(_evaluation_rows(embedding, w), QQ(0)) for w in nil]
    return solve_inequalities(rows, embedding.source.rank) is not None


def _compatible(embedding: Embedding, parabolic: ParabolicSubalgebra, nil: Sequence[Vector]) -> bool:
    target = embedding.target.system
    rows = [(_evaluation_rows(embedding, w), QQ(1)) for w in nil]
    for number in parabolic.levi.positive_roots:
        values = _evaluation_rows(embedding, embedding.pr_root(target.positive_roots[number - 1]))
        rows.append((values, QQ(0)))
        rows.append((tuple(-v for v in values), QQ(0)))
    return solve_inequalities(rows, embedding.source.rank) is not None


def _dedupe(rows: Sequence[Inequality]) -> list[Inequality] | None:
    seen: dict[Vector, Rational] = {}
    for coeffs, bound in rows:
        lead = next((c for c in coeffs if c), None)
        if lead is None:
            if bound > 0:
                return None
            continue
        scale = abs(lead)
        key = tuple(c / scale for c in coeffs)
        value = bound / scale
        if key not in seen or value > seen[key]:
            seen[key] = value
    return [(key, value) for key, value in seen.items()]


def _weight_order(weight: Vector) -> tuple[Rational, ...]:
    return (sum(weight, QQ(0)), *weight)
