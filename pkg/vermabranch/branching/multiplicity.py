"""Branching multiplicities m(mu, lambda) and truncated character identities."""

from __future__ import annotations

import itertools
from collections import Counter
from collections.abc import Sequence
from dataclasses import dataclass
from functools import cache

import structlog

from ..algebra.embedding import Embedding
from ..algebra.exact import QQ, is_numeric, to_rational
from ..algebra.roots import RootSystem, Weight, weyl_group
from ..errors import ConstructionError, RefusalError, UsageError
from ..modules.characters import (
    Character,
    decompose_character,
    levi_character,
    project_character,
)
from .cones import ConeReport, quotient_weights
from .parabolic import ParabolicSubalgebra, induced_bar_parabolic
from .partition import INFINITE, Multiplicity, PartitionContext, kostant_partition

LOG = structlog.get_logger(__name__)


class ConditionAError(RefusalError):
    """Raised when neither or both cones contain zero in the unsupported way."""


@dataclass(frozen=True, slots=True)
class GradedConstituent:
    weight: Weight
    degree: int
    multiplicity: int


@dataclass(frozen=True, slots=True)
class BranchRow:
    weight: Weight
    depth: int
    multiplicity: Multiplicity

    def to_json(self) -> dict[str, object]:
        return {
            "mu": self.weight.to_json(),
            "depth": self.depth,
            "mult": self.multiplicity.to_json(),
        }


@dataclass(frozen=True, slots=True)
class CharacterCheck:
    """Both sides of the truncated branching identity."""

    top: Weight
    cutoff: int
    lhs: Character
    rhs: Character
    branches: tuple[tuple[Weight, Multiplicity], ...]

    @property
    def holds(self) -> bool:
        return dict(self.lhs.terms) == dict(self.rhs.terms)

    def dimensions(self) -> tuple[list[int], list[int]]:
        """Dimensions by depth below the top weight, for both sides."""

        return (
            depth_dimensions(self.lhs, self.top, self.cutoff),
            depth_dimensions(self.rhs, self.top, self.cutoff),
        )


def quasipoly_degree_bound(system: RootSystem, bar_system: RootSystem) -> int | None:
    """Half of (dim g - dim gbar - rank g - rank gbar); None for non-proper pairs."""

    if system == bar_system:
        return None
    value = system.dimension - bar_system.dimension - system.rank - bar_system.rank
    if value < 0 or value % 2:
        return None
    return value // 2


def branching_multiplicity(
    parabolic: ParabolicSubalgebra, embedding: Embedding, highest: Weight, weight: Weight
) -> Multiplicity:
    """Multiplicity of M_mu(gbar, pbar) in M_lambda(g, p), by the alternating partition sum."""

    report = _require_condition_a(parabolic, embedding)
    parabolic.levi.local_weight(highest)
    bar = induced_bar_parabolic(parabolic, embedding)
    values = weight.fundamental
    for index in bar.levi.simple:
        if not is_numeric(values[index]):
            raise UsageError(f"{weight.format()} must be numeric on the Levi of {bar.label}")
    if not weight.is_dominant_integral(bar.levi.simple):
        return Multiplicity.finite(0)
    top = embedding.pr(highest)
    offset = _integral_offset(weight - top)
    if offset is None:
        return Multiplicity.finite(0)
    if report.zero_in_c:
        vectors = [*report.quotient_weights, *(tuple(-c for c in w) for w in report.bar_nilradical_weights)]
        return kostant_partition(PartitionContext.build(vectors), offset)
    context = _full_quotient(embedding)
    shifted = highest + parabolic.levi.rho()
    total = 0
    for element in weyl_group(parabolic.levi.system, parabolic.levi.simple):
        moved = embedding.pr(shifted - element.act(shifted))
        shift = _integral_offset(moved)
        if shift is None:
            raise ConstructionError("Weyl group shift is not integral")
        target = tuple(a + b for a, b in zip(offset, shift, strict=True))
        value = kostant_partition(context, target)
        if value.infinite:
            return INFINITE
        total += element.sign * value.count
    if total < 0:
        raise ConstructionError(f"negative multiplicity {total} at {weight.format()}")
    return Multiplicity.finite(total)


def graded_decomposition(
    parabolic: ParabolicSubalgebra, embedding: Embedding, highest: Weight, degree: int
) -> list[GradedConstituent]:
    """Constituents of V_lambda(l) (x) S^d(n_-/N) over the smaller Levi for d <= degree."""

    report = quotient_weights(parabolic, embedding)
    bar = induced_bar_parabolic(parabolic, embedding)
    source = embedding.source.system
    base = project_character(levi_character(parabolic.levi, highest), embedding)
    quotient = [Weight.from_simple(source, w) for w in report.quotient_weights]
    result = []
    for d in range(degree + 1):
        symmetric = _symmetric_power(source, quotient, d)
        if not symmetric.terms:
            break
        for constituent in decompose_character(base * symmetric, bar.levi):
            result.append(GradedConstituent(constituent.weight, d, constituent.multiplicity))
    return result


def branch_up_to_degree(
    parabolic: ParabolicSubalgebra, embedding: Embedding, highest: Weight, cutoff: int
) -> list[BranchRow]:
    """Every mu with m(mu, lambda) > 0 first occurring in S^d(n_-/N) with d <= cutoff."""

    if cutoff < 0:
        raise UsageError("cutoff must be nonnegative")
    _require_condition_a(parabolic, embedding)
    first_depth: dict[Weight, int] = {}
    seen = Counter()
    for constituent in graded_decomposition(parabolic, embedding, highest, cutoff):
        first_depth.setdefault(constituent.weight, constituent.degree)
        seen[constituent.weight] += constituent.multiplicity
    rows = []
    for weight, depth in first_depth.items():
        multiplicity = branching_multiplicity(parabolic, embedding, highest, weight)
        if not multiplicity.infinite and multiplicity.count < seen[weight]:
            raise ConstructionError(
                f"partition formula gives {multiplicity} at {weight.format()}, "
                f"but {seen[weight]} copies occur by degree {cutoff}"
            )
        rows.append(BranchRow(weight, depth, multiplicity))
    LOG.info("branching computed", parabolic=parabolic.label, rows=len(rows), cutoff=cutoff)
    return rows


def truncated_character(
    base: Character, factors: Sequence[Weight], top: Weight, cutoff: int
) -> Character:
    """``base`` times prod 1/(1 - e^f) over ``factors``, keeping depth <= cutoff below ``top``."""

    terms = {w: c for w, c in base.terms.items() if _height(top - w) <= cutoff}
    for factor in factors:
        step = _height(-factor)
        if step <= 0:
            raise ConstructionError(f"{factor.format()} does not lower the weight")
        expanded: dict[Weight, int] = {}
        for weight, count in terms.items():
            current = weight
            while _height(top - current) <= cutoff:
                expanded[current] = expanded.get(current, 0) + count
                current = current + factor
        terms = expanded
    return Character.of(terms.items())


def verma_character(
    parabolic: ParabolicSubalgebra, embedding: Embedding, highest: Weight, cutoff: int
) -> Character:
    """pr of the character of M_lambda(g, p), truncated."""

    base = project_character(levi_character(parabolic.levi, highest), embedding)
    target = embedding.target.system
    factors = [
        -embedding.pr(Weight.from_simple(target, target.positive_roots[k - 1]))
        for k in parabolic.nilradical_roots
    ]
    return truncated_character(base, factors, embedding.pr(highest), cutoff)


def character_identity(
    parabolic: ParabolicSubalgebra, embedding: Embedding, highest: Weight, cutoff: int
) -> CharacterCheck:
    """Compare pr Ch M_lambda with sum m(mu, lambda) Ch M_mu(gbar, pbar), both truncated."""

    top = embedding.pr(highest)
    bar = induced_bar_parabolic(parabolic, embedding)
    source = embedding.source.system
    bar_factors = [-source.root(k) for k in bar.nilradical_roots]
    lhs = verma_character(parabolic, embedding, highest, cutoff)
    rhs = Character()
    branches = []
    for depth in itertools.product(range(cutoff + 1), repeat=source.rank):
        if sum(depth) > cutoff:
            continue
        weight = top - Weight.from_simple(source, depth)
        if not weight.is_dominant_integral(bar.levi.simple):
            continue
        multiplicity = branching_multiplicity(parabolic, embedding, highest, weight)
        if multiplicity.infinite:
            raise UsageError(f"m is infinite at {weight.format()}; no finite identity to check")
        if not multiplicity:
            continue
        branches.append((weight, multiplicity))
        piece = truncated_character(levi_character(bar.levi, weight), bar_factors, top, cutoff)
        rhs = rhs + piece.scaled(multiplicity.count)
    return CharacterCheck(top, cutoff, lhs, rhs, tuple(branches))


def depth_dimensions(character: Character, top: Weight, cutoff: int) -> list[int]:
    sizes = [0] * (cutoff + 1)
    for weight, count in character.terms.items():
        height = _height(top - weight)
        if 0 <= height <= cutoff:
            sizes[height] += count
    return sizes


def _require_condition_a(parabolic: ParabolicSubalgebra, embedding: Embedding) -> ConeReport:
    report = quotient_weights(parabolic, embedding)
    if not report.condition_a:
        raise ConditionAError(
            f"Condition A fails for {parabolic.label}: 0 is in the cone of n_- weights "
            "but not in the cone of the quotient weights"
        )
    return report


@cache
def _full_quotient(embedding: Embedding) -> PartitionContext:
    # weights of m_- / i(bar m_-) for the Borel subalgebras
    target = embedding.target.system
    source = embedding.source.system
    remaining = Counter(tuple(-c for c in embedding.pr_root(root)) for root in target.positive_roots)
    for root in source.positive_roots:
        key = tuple(QQ(-c) for c in root)
        if not remaining[key]:
            raise ConstructionError(f"source root {root} is not a projected target root")
        remaining[key] -= 1
    return PartitionContext.build(sorted(remaining.elements()))


def _symmetric_power(system: RootSystem, weights: Sequence[Weight], degree: int) -> Character:
    if degree == 0:
        return Character({system.zero(): 1})
    if not weights:
        return Character()
    return Character.of(
        (sum(combo, system.zero()), 1)
        for combo in itertools.combinations_with_replacement(weights, degree)
    )


def _integral_offset(weight: Weight) -> tuple[int, ...] | None:
    if not weight.is_numeric():
        raise UsageError(f"{weight.format()} depends on parameters; specialize first")
    values = [to_rational(c) for c in weight.simple]
    if any(v.denominator != 1 for v in values):
        return None
    return tuple(int(v.numerator) for v in values)


def _height(weight: Weight) -> int:
    offset = _integral_offset(weight)
    if offset is None:
        raise ConstructionError(f"{weight.format()} is not in the root lattice")
    return sum(offset)
