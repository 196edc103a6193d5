"""Chevalley bases of simple Lie algebras and their structure constants.

Root vectors are numbered like the positive roots: ``("g", k)`` spans the root space of
positive root k, ``("g", -k)`` the opposite one, and ``("h", j)`` is the Cartan element
dual to simple root j under the invariant form (all indices 1-based).
"""

from __future__ import annotations

import itertools
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field
from functools import cache

import structlog

from ..errors import ConstructionError, UsageError
from .exact import (
    FIELD,
    QQ,
    ExactMatrix,
    Rational,
    Scalar,
    Style,
    format_coefficient,
    inverse_rational,
    lift,
    nullspace,
)
from .roots import RootSystem, UnsupportedTypeError, Weight, cartan_matrix, root_system

LOG = structlog.get_logger(__name__)

Generator = tuple[str, int]
_Sparse = dict[tuple[int, int], Rational]


def root_generator(number: int) -> Generator:
    return ("g", number)


def cartan_generator(index: int) -> Generator:
    return ("h", index)


def parse_generator(text: str) -> Generator:
    """Parse ``g-3``, ``g_{-3}`` or ``h2``."""

    cleaned = text.strip().replace("_", "").replace("{", "").replace("}", "")
    if len(cleaned) < 2 or cleaned[0] not in "gh":
        raise UsageError(f"cannot parse generator {text!r}")
    try:
        number = int(cleaned[1:])
    except ValueError as exc:
        raise UsageError(f"cannot parse generator {text!r}") from exc
    if number == 0 or (cleaned[0] == "h" and number < 0):
        raise UsageError(f"cannot parse generator {text!r}")
    return (cleaned[0], number)


@dataclass(frozen=True, slots=True)
class LieElement:
    """Finite linear combination of Chevalley generators."""

    terms: Mapping[Generator, Scalar] = field(default_factory=dict)

    @classmethod
    def of(cls, items: Iterable[tuple[Generator, object]]) -> LieElement:
        data: dict[Generator, Scalar] = {}
        for gen, coeff in items:
            total = data.get(gen, FIELD.zero) + lift(coeff)
            if total:
                data[gen] = total
            else:
                data.pop(gen, None)
        return cls(data)

    @classmethod
    def basis(cls, gen: Generator) -> LieElement:
        return cls({gen: FIELD.one})

    def coefficient(self, gen: Generator) -> Scalar:
        return self.terms.get(gen, FIELD.zero)

    @property
    def support(self) -> tuple[Generator, ...]:
        return tuple(sorted(self.terms, key=generator_order))

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: LieElement) -> LieElement:
        return LieElement.of([*self.terms.items(), *other.terms.items()])

    def __sub__(self, other: LieElement) -> LieElement:
        return self + other.scaled(-1)

    def scaled(self, factor: object) -> LieElement:
        factor = lift(factor)
        return LieElement.of((gen, coeff * factor) for gen, coeff in self.terms.items())

    def format(self, symbol: str = "g", style: Style = "text") -> str:
        pieces = []
        for gen in self.support:
            piece = format_coefficient(self.terms[gen], style) + format_generator(gen, symbol, style)
            if pieces and not piece.startswith("-"):
                piece = "+" + piece
            pieces.append(piece)
        return "".join(pieces) or "0"


def generator_order(gen: Generator) -> tuple[int, int]:
    """Positive root vectors, then negative ones, then the Cartan part."""

    kind, number = gen
    if kind == "h":
        return (2, number)
    return (0, number) if number > 0 else (1, -number)


def format_generator(gen: Generator, symbol: str = "g", style: Style = "text") -> str:
    kind, number = gen
    letter = symbol if kind == "g" else ("h̄" if symbol == "ḡ" else "h")
    if style == "latex":
        letter = {"ḡ": "\\bar{g}", "h̄": "\\bar{h}"}.get(letter, letter)
        return f"{letter}_{{{number}}}"
    return f"{letter}{number}" if number > 0 else f"{letter}_{{{number}}}"


class ChevalleyAlgebra:
    """A simple Lie algebra with a Chevalley basis built from a matrix realization."""

    def __init__(self, system: RootSystem, symbol: str = "g") -> None:
        self.system = system
        self.symbol = symbol
        rank = system.rank
        count = len(system.positive_roots)
        self.generators: tuple[Generator, ...] = (
            *(("g", k) for k in range(1, count + 1)),
            *(("g", -k) for k in range(1, count + 1)),
            *(("h", j) for j in range(1, rank + 1)),
        )
        self.derivations: dict[int, tuple[int, int, int]] = {}
        self._form_inverse = inverse_rational(system.form)
        self._matrices = self._build_matrices()
        self._table = self._build_table()
        LOG.debug("chevalley basis built", algebra=system.name, brackets=len(self._table))

    @property
    def rank(self) -> int:
        return self.system.rank

    @property
    def dimension(self) -> int:
        return len(self.generators)

    @property
    def positive_generators(self) -> tuple[Generator, ...]:
        return tuple(g for g in self.generators if g[0] == "g" and g[1] > 0)

    @property
    def negative_generators(self) -> tuple[Generator, ...]:
        return tuple(g for g in self.generators if g[0] == "g" and g[1] < 0)

    @property
    def cartan_generators(self) -> tuple[Generator, ...]:
        return tuple(g for g in self.generators if g[0] == "h")

    def root_of(self, gen: Generator) -> tuple[int, ...]:
        """Simple-root coordinates of the generator's weight."""

        kind, number = gen
        if kind == "h":
            return (0,) * self.rank
        root = self.system.positive_roots[abs(number) - 1]
        return root if number > 0 else tuple(-c for c in root)

    def generator_for(self, coords: Sequence[int]) -> Generator | None:
        coords = tuple(coords)
        positive = self.system.root_number(coords)
        if positive is not None:
            return ("g", positive)
        negative = self.system.root_number(tuple(-c for c in coords))
        if negative is not None:
            return ("g", -negative)
        return None

    def simple_generator(self, index: int, sign: int = 1) -> Generator:
        """Root vector of simple root ``index`` (0-based)."""

        number = self.system.root_number(tuple(1 if i == index else 0 for i in range(self.rank)))
        assert number is not None
        return ("g", sign * number)

    def bracket_generators(self, left: Generator, right: Generator) -> Mapping[Generator, Rational]:
        return self._table.get((left, right), {})

    def bracket(self, left: LieElement, right: LieElement) -> LieElement:
        items = []
        for a, ca in left.terms.items():
            for b, cb in right.terms.items():
                for c, value in self.bracket_generators(a, b).items():
                    items.append((c, ca * cb * value))
        return LieElement.of(items)

    def structure_table(self) -> dict[tuple[Generator, Generator], dict[Generator, Rational]]:
        """Nonzero brackets of basis generators."""

        return {key: dict(value) for key, value in self._table.items()}

    def cartan_value(self, gen: Generator, weight: Weight) -> Scalar:
        """Value of the weight on the Cartan generator ``gen``."""

        _, index = gen
        return weight.pairing(self.system.simple_root(index - 1))

    def matrix(self, gen: Generator) -> ExactMatrix:
        size = self._size
        return ExactMatrix.build(size, size, ((k, v) for k, v in self._matrices[gen].items()))

    def format_generator(self, gen: Generator, style: Style = "text") -> str:
        return format_generator(gen, self.symbol, style)

    def _build_matrices(self) -> dict[Generator, _Sparse]:
        system = self.system
        size, raising, lowering = _realization(system)
        self._size = size
        matrices: dict[Generator, _Sparse] = {}
        for number, root in enumerate(system.positive_roots, start=1):
            if sum(root) == 1:
                index = root.index(1)
                matrices[("g", number)] = raising[index]
                matrices[("g", -number)] = lowering[index]
                continue
            index = next(
                i
                for i in range(system.rank)
                if root[i] and system.root_number(_shift(root, i, -1)) is not None
            )
            rest = system.root_number(_shift(root, index, -1))
            depth = 1
            while system.root_number(_shift(root, index, -(depth + 1))) is not None:
                depth += 1
            self.derivations[number] = (index, rest, depth)
            upper = _scale(_commutator(raising[index], matrices[("g", rest)]), QQ(1, depth))
            lower = _scale(_commutator(lowering[index], matrices[("g", -rest)]), QQ(-1, depth))
            if not upper or not lower:
                raise ConstructionError(f"root vector {number} of {system.name} vanished")
            matrices[("g", number)] = upper
            matrices[("g", -number)] = lower
        for index in range(system.rank):
            coroot = _commutator(raising[index], lowering[index])
            matrices[("h", index + 1)] = _scale(coroot, system.form[index][index] / 2)
        self._check_serre_pairs(matrices, raising, lowering)
        return matrices

    def _check_serre_pairs(
        self, matrices: dict[Generator, _Sparse], raising: list[_Sparse], lowering: list[_Sparse]
    ) -> None:
        rank = self.system.rank
        for i, j in itertools.product(range(rank), repeat=2):
            product = _commutator(raising[i], lowering[j])
            if i != j and product:
                raise ConstructionError(f"[e{i + 1}, f{j + 1}] should vanish")
            expected = self.system.form[i][j]
            image = _commutator(matrices[("h", j + 1)], raising[i])
            if image != _scale(raising[i], expected):
                raise ConstructionError(f"simple root {i + 1} has the wrong value on h{j + 1}")

    def _build_table(self) -> dict[tuple[Generator, Generator], dict[Generator, Rational]]:
        table: dict[tuple[Generator, Generator], dict[Generator, Rational]] = {}
        for a, b in itertools.product(self.generators, repeat=2):
            product = _commutator(self._matrices[a], self._matrices[b])
            if not product:
                continue
            weight = tuple(x + y for x, y in zip(self.root_of(a), self.root_of(b), strict=True))
            table[(a, b)] = self._decompose(product, weight)
        return table

    def _decompose(self, product: _Sparse, weight: tuple[int, ...]) -> dict[Generator, Rational]:
        if any(weight):
            target = self.generator_for(weight)
            if target is None:
                raise ConstructionError(f"bracket landed on non-root {weight}")
            reference = self._matrices[target]
            position = min(reference)
            coefficient = product.get(position, QQ(0)) / reference[position]
            if _scale(reference, coefficient) != product:
                raise ConstructionError(f"bracket is not proportional to {target}")
            return {target: coefficient}
        values = []
        for index in range(self.rank):
            simple = self._matrices[self.simple_generator(index)]
            image = _commutator(product, simple)
            position = min(simple)
            values.append(image.get(position, QQ(0)) / simple[position])
        coords = [
            sum((self._form_inverse[j][i] * values[i] for i in range(self.rank)), QQ(0))
            for j in range(self.rank)
        ]
        rebuilt: _Sparse = {}
        for j, value in enumerate(coords):
            rebuilt = _add(rebuilt, _scale(self._matrices[("h", j + 1)], value))
        if rebuilt != product:
            raise ConstructionError("Cartan component does not reconstruct the bracket")
        return {("h", j + 1): value for j, value in enumerate(coords) if value}


@cache
def chevalley_algebra(family: str, rank: int, symbol: str = "g") -> ChevalleyAlgebra:
    return ChevalleyAlgebra(root_system(family, rank), symbol)


@dataclass(frozen=True, slots=True)
class SubalgebraReport:
    """Closure of a set of elements under brackets, with its type when it is simple."""

    dimension: int
    basis: tuple[LieElement, ...]
    toral_rank: int
    cartan_matrix: tuple[tuple[int, ...], ...] | None
    cartan_type: str | None


_CANDIDATE_TYPES = (("A", 1), ("A", 2), ("B", 2), ("G", 2), ("A", 3), ("B", 3), ("C", 3))


def generate_subalgebra(algebra: ChevalleyAlgebra, seeds: Sequence[LieElement]) -> SubalgebraReport:
    """Close ``seeds`` under brackets and identify the Cartan type of the result.

    The type is found from the roots of the subalgebra with respect to the diagonal
    elements it contains; only types of rank at most three are recognised.
    """

    order = {gen: i for i, gen in enumerate(algebra.generators)}
    echelon: list[tuple[Generator, LieElement]] = []
    basis: list[LieElement] = []
    queue = list(seeds)
    while queue:
        element = queue.pop(0)
        reduced = _reduce(element, echelon)
        if reduced.is_zero():
            continue
        pivot = min(reduced.terms, key=order.__getitem__)
        reduced = reduced.scaled(1 / reduced.terms[pivot])
        echelon = [(p, _eliminate(e, reduced, pivot)) for p, e in echelon]
        echelon.append((pivot, reduced))
        for other in basis:
            queue.append(algebra.bracket(reduced, other))
        basis.append(reduced)
    toral = _toral_part(algebra, basis)
    cartan, label = _identify(algebra, basis, toral)
    return SubalgebraReport(len(basis), tuple(basis), len(toral), cartan, label)


def _reduce(element: LieElement, echelon: Sequence[tuple[Generator, LieElement]]) -> LieElement:
    for pivot, row in echelon:
        element = _eliminate(element, row, pivot)
    return element


def _eliminate(element: LieElement, row: LieElement, pivot: Generator) -> LieElement:
    coeff = element.coefficient(pivot)
    return element - row.scaled(coeff) if coeff else element


def _toral_part(algebra: ChevalleyAlgebra, basis: Sequence[LieElement]) -> list[LieElement]:
    roots = [g for g in algebra.generators if g[0] == "g"]
    if not basis:
        return []
    rows = [[element.coefficient(gen) for element in basis] for gen in roots]
    kernel = nullspace(ExactMatrix.from_rows(rows))
    return [
        LieElement.of(
            (gen, lift(c) * element.coefficient(gen))
            for c, element in zip(vector, basis, strict=True)
            for gen in element.terms
        )
        for vector in kernel
    ]


def _identify(
    algebra: ChevalleyAlgebra, basis: Sequence[LieElement], toral: Sequence[LieElement]
) -> tuple[tuple[tuple[int, ...], ...] | None, str | None]:
    if not toral:
        return None, None
    blocks: dict[tuple[Scalar, ...], list[Generator]] = {}
    for gen in algebra.generators:
        root = Weight.from_simple(algebra.system, algebra.root_of(gen))
        value = tuple(
            sum(
                (c * algebra.cartan_value(h, root) for h, c in t.terms.items()),
                FIELD.zero,
            )
            for t in toral
        )
        blocks.setdefault(value, []).append(gen)
    zero = tuple(FIELD.zero for _ in toral)
    restricted = []
    for value, gens in blocks.items():
        if not any(value):
            continue
        rank = ExactMatrix.from_rows([[e.coefficient(g) for g in gens] for e in basis]).rank()
        if rank > 1:
            return None, None
        if rank == 1:
            restricted.append(value)
    zero_gens = blocks.get(zero, [])
    zero_rank = ExactMatrix.from_rows([[e.coefficient(g) for g in zero_gens] for e in basis]).rank()
    if not restricted or zero_rank != len(toral) or len(toral) + len(restricted) != len(basis):
        return None, None
    positive = [v for v in restricted if _lex_positive(v)]
    members = set(restricted)
    simple = [
        v
        for v in positive
        if not any(
            tuple(a - b for a, b in zip(v, w, strict=True)) in members
            and _lex_positive(tuple(a - b for a, b in zip(v, w, strict=True)))
            for w in positive
        )
    ]
    matrix = []
    for a in simple:
        row = []
        for b in simple:
            if a == b:
                row.append(2)
                continue
            steps = 0
            cursor = a
            while True:
                cursor = tuple(x + y for x, y in zip(cursor, b, strict=True))
                if cursor not in members:
                    break
                steps += 1
            row.append(-steps)
        matrix.append(tuple(row))
    cartan = tuple(matrix)
    for family, rank in _CANDIDATE_TYPES:
        if rank != len(simple):
            continue
        reference = cartan_matrix(family, rank)
        for perm in itertools.permutations(range(rank)):
            if all(cartan[perm[i]][perm[j]] == reference[i][j] for i in range(rank) for j in range(rank)):
                return cartan, f"{family}{rank}"
    return cartan, None


def _lex_positive(value: Sequence[Scalar]) -> bool:
    for entry in value:
        if entry:
            numer = entry.numer.LC * entry.denom.LC
            return numer > 0
    return False


def _realization(system: RootSystem) -> tuple[int, list[_Sparse], list[_Sparse]]:
    family, rank = system.family, system.rank
    if family == "A":
        raising = [{(i, i + 1): QQ(1)} for i in range(rank)]
        lowering = [{(i + 1, i): QQ(1)} for i in range(rank)]
        return rank + 1, raising, lowering
    if family == "B":
        size, pos = _orthogonal_positions(rank, odd=True)
        raising = [_m(pos, i, i + 1) for i in range(1, rank)]
        lowering = [_m(pos, i + 1, i) for i in range(1, rank)]
        raising.append(_x(pos, rank))
        lowering.append(_x(pos, -rank))
        return size, raising, lowering
    if family == "C":
        size, pos = _orthogonal_positions(rank, odd=False)
        raising = [_m(pos, i, i + 1) for i in range(1, rank)]
        lowering = [_m(pos, i + 1, i) for i in range(1, rank)]
        raising.append({(pos[rank], pos[-rank]): QQ(1)})
        lowering.append({(pos[-rank], pos[rank]): QQ(1)})
        return size, raising, lowering
    if family == "D":
        size, pos = _orthogonal_positions(rank, odd=False)
        raising = [_m(pos, i, i + 1) for i in range(1, rank)]
        lowering = [_m(pos, i + 1, i) for i in range(1, rank)]
        raising.append(_m(pos, rank - 1, -rank))
        lowering.append(_m(pos, -rank, rank - 1))
        return size, raising, lowering
    if family == "G" and rank == 2:
        # inside so(7): e1 = M12 + X3, e2 = M23
        size, pos = _orthogonal_positions(3, odd=True)
        raising = [_add(_m(pos, 1, 2), _x(pos, 3)), _m(pos, 2, 3)]
        lowering = [_add(_m(pos, 2, 1), _x(pos, -3)), _m(pos, 3, 2)]
        return size, raising, lowering
    raise UnsupportedTypeError(f"no matrix realization for {system.name}")


def _orthogonal_positions(rank: int, *, odd: bool) -> tuple[int, dict[int, int]]:
    # basis e1..en, (e0), e-1..e-n
    positions = {i: i - 1 for i in range(1, rank + 1)}
    offset = rank
    if odd:
        positions[0] = rank
        offset += 1
    for i in range(1, rank + 1):
        positions[-i] = offset + i - 1
    return offset + rank, positions


def _m(pos: Mapping[int, int], a: int, b: int) -> _Sparse:
    """E_ab - E_{-b,-a}."""

    return _add({(pos[a], pos[b]): QQ(1)}, {(pos[-b], pos[-a]): QQ(-1)})


def _x(pos: Mapping[int, int], a: int) -> _Sparse:
    """E_a0 + 2 E_{0,-a}."""

    return {(pos[a], pos[0]): QQ(1), (pos[0], pos[-a]): QQ(2)}


def _add(left: _Sparse, right: _Sparse) -> _Sparse:
    result = dict(left)
    for key, value in right.items():
        total = result.get(key, QQ(0)) + value
        if total:
            result[key] = total
        else:
            result.pop(key, None)
    return result


def _scale(matrix: _Sparse, factor: Rational) -> _Sparse:
    if not factor:
        return {}
    return {key: value * factor for key, value in matrix.items()}


def _multiply(left: _Sparse, right: _Sparse) -> _Sparse:
    result: _Sparse = {}
    for (i, k), a in left.items():
        for (k2, j), b in right.items():
            if k == k2:
                result[(i, j)] = result.get((i, j), QQ(0)) + a * b
    return {key: value for key, value in result.items() if value}


def _commutator(left: _Sparse, right: _Sparse) -> _Sparse:
    return _add(_multiply(left, right), _scale(_multiply(right, left), QQ(-1)))


def _shift(root: Sequence[int], index: int, amount: int) -> tuple[int, ...]:
    return tuple(c + (amount if i == index else 0) for i, c in enumerate(root))
