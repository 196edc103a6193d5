"""Weight multiplicities, projected characters and decomposition over a smaller Levi."""

from __future__ import annotations

import functools
from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field

from ..algebra.embedding import Embedding
from ..algebra.exact import (
    QQ,
    ExactMatrix,
    Rational,
    Scalar,
    is_numeric,
    lift,
    nullspace,
    to_int,
    to_rational,
)
from ..algebra.roots import Weight
from ..errors import ConstructionError
from .finite import FiniteModule, Levi, levi_dimension


@dataclass(frozen=True, slots=True)
class Character:
    """Formal character: weight -> multiplicity."""

    terms: Mapping[Weight, int] = field(default_factory=dict)

    @classmethod
    def of(cls, items: Iterable[tuple[Weight, int]]) -> Character:
        data: dict[Weight, int] = {}
        for weight, count in items:
            total = data.get(weight, 0) + count
            if total:
                data[weight] = total
            else:
                data.pop(weight, None)
        return cls(data)

    def multiplicity(self, weight: Weight) -> int:
        return self.terms.get(weight, 0)

    @property
    def dimension(self) -> int:
        return sum(self.terms.values())

    def __add__(self, other: Character) -> Character:
        return Character.of([*self.terms.items(), *other.terms.items()])

    def __sub__(self, other: Character) -> Character:
        return self + other.scaled(-1)

    def scaled(self, factor: int) -> Character:
        return Character.of((w, c * factor) for w, c in self.terms.items())

    def __mul__(self, other: Character) -> Character:
        return Character.of(
            (a + b, ca * cb) for a, ca in self.terms.items() for b, cb in other.terms.items()
        )


@dataclass(frozen=True, slots=True)
class Constituent:
    weight: Weight
    multiplicity: int


def levi_character(levi: Levi, highest: Weight) -> Character:
    """Freudenthal's formula on the Levi; weights are returned in the full weight lattice."""

    local = levi.local_weight(highest)
    system = levi.system
    simple = levi.simple
    if not simple:
        return Character({highest: 1})
    form = [[system.form[i][j] for j in simple] for i in simple]
    top = [QQ(a) * form[k][k] / 2 for k, a in enumerate(local)]
    roots = [tuple(root[i] for i in simple) for root in system.levi_positive_roots(simple)]
    size = len(simple)

    def pairing(depth: tuple[int, ...], root: tuple[int, ...]) -> Rational:
        value = sum((top[j] * root[j] for j in range(size)), QQ(0))
        for k in range(size):
            if depth[k]:
                value -= depth[k] * sum((form[k][j] * root[j] for j in range(size)), QQ(0))
        return value

    def norm_gap(depth: tuple[int, ...]) -> Rational:
        value = QQ(0)
        for k in range(size):
            value += 2 * depth[k] * top[k] + depth[k] * form[k][k]
            for j in range(size):
                value -= depth[k] * depth[j] * form[k][j]
        return value

    multiplicities: dict[tuple[int, ...], int] = {(0,) * size: 1}
    layer = [(0,) * size]
    while layer:
        candidates = sorted(
            {tuple(d + (1 if j == k else 0) for j, d in enumerate(depth))
             for depth in layer for k in range(size)}
        )
        layer = []
        for depth in candidates:
            gap = norm_gap(depth)
            if not gap:
                continue
            total = QQ(0)
            for root in roots:
                step = 1
                while True:
                    above = tuple(d - step * r for d, r in zip(depth, root, strict=True))
                    if min(above) < 0:
                        break
                    count = multiplicities.get(above, 0)
                    if count:
                        total += count * pairing(above, root)
                    step += 1
            value = 2 * total / gap
            if value:
                multiplicities[depth] = to_int(value)
                layer.append(depth)
    return Character.of(
        (highest - Weight.from_simple(system, _expand(depth, simple, system.rank)), count)
        for depth, count in multiplicities.items()
    )


def freudenthal_character(module: FiniteModule) -> Character:
    return levi_character(module.levi, module.highest_weight)


def basis_character(module: FiniteModule) -> Character:
    """Character read off the monomial basis; agrees with Freudenthal's formula."""

    return Character.of((module.weight(i), 1) for i in range(module.dimension))


def project_character(character: Character, embedding: Embedding) -> Character:
    return Character.of((embedding.pr(w), c) for w, c in character.terms.items())


def decompose_character(character: Character, bar_levi: Levi) -> list[Constituent]:
    """Peel off irreducible characters of ``bar_levi`` from the top, one weight at a time."""

    remaining = dict(character.terms)
    constituents: list[Constituent] = []
    while remaining:
        if any(c < 0 for c in remaining.values()):
            raise ConstructionError("character has negative multiplicities")
        maximal = [
            w for w in remaining if not any(_raises(w, other, bar_levi) for other in remaining)
        ]
        highest = max(maximal, key=functools.cmp_to_key(_compare))
        count = remaining[highest]
        if not highest.is_dominant_integral(bar_levi.simple):
            raise ConstructionError(f"{highest.format()} is maximal but not dominant")
        for weight, mult in levi_character(bar_levi, highest).terms.items():
            value = remaining.get(weight, 0) - count * mult
            if value:
                remaining[weight] = value
            else:
                remaining.pop(weight, None)
        constituents.append(Constituent(highest, count))
    return constituents


def decompose_over_bar_levi(
    module: FiniteModule, embedding: Embedding, bar_levi: Levi
) -> list[Constituent]:
    """Decompose ``pr`` of the module character into irreducibles of the smaller Levi."""

    constituents = decompose_character(
        project_character(freudenthal_character(module), embedding), bar_levi
    )
    total = sum(c.multiplicity * levi_dimension(bar_levi, c.weight) for c in constituents)
    if total != module.dimension:
        raise ConstructionError(f"constituents add up to {total}, not {module.dimension}")
    return constituents


def fd_singular_vectors(
    module: FiniteModule, embedding: Embedding, bar_levi: Levi, weight: Weight
) -> list[dict[int, Scalar]]:
    """Vectors of the given projected weight killed by the raising operators of ``bar_levi``."""

    columns = [i for i in range(module.dimension) if embedding.pr(module.weight(i)) == weight]
    if not columns:
        return []
    operators = [
        module.act(embedding.image(embedding.source.simple_generator(index)))
        for index in bar_levi.simple
    ]
    rows = [
        [operator.get(row, column) for column in columns]
        for operator in operators
        for row in range(module.dimension)
    ]
    if rows:
        kernel = nullspace(ExactMatrix.from_rows(rows))
    else:
        kernel = [[1 if i == j else 0 for i in range(len(columns))] for j in range(len(columns))]
    vectors = []
    for solution in kernel:
        vector = {columns[k]: lift(c) for k, c in enumerate(solution) if c}
        for operator in operators:
            if operator.apply(vector):
                raise ConstructionError("singular vector is not annihilated by raising operators")
        vectors.append(vector)
    return vectors


def _raises(lower: Weight, upper: Weight, bar_levi: Levi) -> bool:
    """True when ``upper - lower`` is a nonzero sum of simple roots of ``bar_levi``."""

    if lower == upper:
        return False
    for index, value in enumerate((upper - lower).simple):
        if not value:
            continue
        if index not in bar_levi.simple or not is_numeric(value):
            return False
        number = to_rational(value)
        if number < 0 or number.denominator != 1:
            return False
    return True


def _compare(left: Weight, right: Weight) -> int:
    difference = (left - right).simple
    if all(is_numeric(v) for v in difference):
        numbers = [to_rational(v) for v in difference]
        key = (sum(numbers, QQ(0)), *numbers)
        return (key > (QQ(0),) * len(key)) - (key < (QQ(0),) * len(key))
    return (left.format() > right.format()) - (left.format() < right.format())


def _expand(depth: tuple[int, ...], simple: tuple[int, ...], rank: int) -> list[int]:
    full = [0] * rank
    for value, index in zip(depth, simple, strict=True):
        full[index] = value
    return full
