"""Root systems: Cartan matrices, positive roots, weights and Weyl groups."""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from enum import StrEnum
from functools import cache

from sympy import Symbol, expand, sympify

from ..errors import UsageError
from .exact import (
    FIELD,
    QQ,
    VARIABLES,
    Rational,
    Scalar,
    Style,
    format_coefficient,
    format_scalar,
    inverse_rational,
    is_numeric,
    lift,
    to_int,
    to_rational,
)


class UnsupportedTypeError(UsageError):
    """Raised for Cartan types or ranks that do not exist."""


class Basis(StrEnum):
    FUNDAMENTAL = "fundamental"
    SIMPLE_ROOT = "simple"
    EPSILON = "epsilon"


@dataclass(frozen=True, slots=True)
class RootSystem:
    """A simple root system in Bourbaki numbering.

    ``form`` is the invariant bilinear form on simple roots; short roots have length 2
    except in type B where they have length 1.
    """

    family: str
    rank: int
    cartan: tuple[tuple[int, ...], ...]
    form: tuple[tuple[Rational, ...], ...]
    positive_roots: tuple[tuple[int, ...], ...]
    weight_symbol: str
    root_symbol: str
    weight_ascii: str
    epsilon_matrix: tuple[tuple[Rational, ...], ...] | None = None

    @property
    def name(self) -> str:
        return f"{self.family}{self.rank}"

    @property
    def dimension(self) -> int:
        """Dimension of the simple Lie algebra with this root system."""

        return self.rank + 2 * len(self.positive_roots)

    def root(self, number: int) -> Weight:
        """Positive root ``number`` (1-based, ordered by height)."""

        return Weight.from_simple(self, self.positive_roots[number - 1])

    def root_number(self, coords: Sequence[int]) -> int | None:
        """1-based index of a positive root, or None."""

        try:
            return self.positive_roots.index(tuple(coords)) + 1
        except ValueError:
            return None

    def simple_root(self, index: int) -> Weight:
        coords = [0] * self.rank
        coords[index] = 1
        return Weight.from_simple(self, coords)

    def fundamental_weight(self, index: int) -> Weight:
        coords = [0] * self.rank
        coords[index] = 1
        return Weight.from_fundamental(self, coords)

    def zero(self) -> Weight:
        return Weight.from_fundamental(self, [0] * self.rank)

    def rho(self, levi: Iterable[int] | None = None) -> Weight:
        """Half sum of positive roots, of the Levi given by simple indices if supplied."""

        chosen = range(self.rank) if levi is None else set(levi)
        coords = [1 if i in chosen else 0 for i in range(self.rank)]
        if levi is None:
            return Weight.from_fundamental(self, coords)
        total = [QQ(0)] * self.rank
        for root in self.levi_positive_roots(chosen):
            total = [t + c for t, c in zip(total, root, strict=True)]
        return Weight.from_simple(self, [t / 2 for t in total])

    def levi_positive_roots(self, levi: Iterable[int]) -> tuple[tuple[int, ...], ...]:
        chosen = set(levi)
        return tuple(
            root
            for root in self.positive_roots
            if all(c == 0 or i in chosen for i, c in enumerate(root))
        )

    def pair_simple(self, left: Sequence[object], right: Sequence[object]) -> Scalar:
        """Bilinear form on simple-root coordinate vectors."""

        total = FIELD.zero
        for i, a in enumerate(left):
            if not a:
                continue
            for j, b in enumerate(right):
                if b and self.form[i][j]:
                    total += lift(a) * lift(b) * self.form[i][j]
        return total


class Weight:
    """A weight stored in simple-root coordinates, tagged with a display basis."""

    __slots__ = ("basis", "simple", "system")

    def __init__(
        self, system: RootSystem, simple: Sequence[object], basis: Basis = Basis.FUNDAMENTAL
    ) -> None:
        if len(simple) != system.rank:
            raise UsageError(f"{system.name} weights need {system.rank} coordinates")
        self.system = system
        self.simple = tuple(lift(c) for c in simple)
        self.basis = basis

    @classmethod
    def from_simple(cls, system: RootSystem, coords: Sequence[object]) -> Weight:
        return cls(system, coords, Basis.SIMPLE_ROOT)

    @classmethod
    def from_fundamental(cls, system: RootSystem, coords: Sequence[object]) -> Weight:
        inverse = _inverse_cartan(system)
        simple = _row_times(coords, inverse)
        return cls(system, simple, Basis.FUNDAMENTAL)

    @classmethod
    def from_epsilon(cls, system: RootSystem, coords: Sequence[object]) -> Weight:
        if system.epsilon_matrix is None:
            raise UnsupportedTypeError(f"{system.name} has no epsilon coordinates")
        simple = _row_times(coords, _inverse_epsilon(system))
        return cls(system, simple, Basis.EPSILON)

    @property
    def fundamental(self) -> tuple[Scalar, ...]:
        return tuple(_row_times(self.simple, self.system.cartan))

    @property
    def epsilon(self) -> tuple[Scalar, ...]:
        if self.system.epsilon_matrix is None:
            raise UnsupportedTypeError(f"{self.system.name} has no epsilon coordinates")
        return tuple(_row_times(self.simple, self.system.epsilon_matrix))

    @property
    def coords(self) -> tuple[Scalar, ...]:
        """Coordinates in the display basis."""

        if self.basis is Basis.FUNDAMENTAL:
            return self.fundamental
        if self.basis is Basis.EPSILON:
            return self.epsilon
        return self.simple

    def in_basis(self, basis: Basis) -> Weight:
        return Weight(self.system, self.simple, basis)

    def pairing(self, other: Weight) -> Scalar:
        return self.system.pair_simple(self.simple, other.simple)

    def coroot_value(self, index: int) -> Scalar:
        """<self, alpha_index^vee>, i.e. the fundamental coordinate."""

        return self.fundamental[index]

    def is_numeric(self) -> bool:
        return all(is_numeric(c) for c in self.simple)

    def numeric_simple(self) -> tuple[Rational, ...]:
        if not self.is_numeric():
            raise UsageError(f"{self.format()} depends on parameters; specialize it first")
        return tuple(to_rational(c) for c in self.simple)

    def numeric_fundamental(self) -> tuple[Rational, ...]:
        if not self.is_numeric():
            raise UsageError(f"{self.format()} depends on parameters; specialize it first")
        return tuple(to_rational(c) for c in self.fundamental)

    def is_dominant_integral(self, indices: Iterable[int] | None = None) -> bool:
        chosen = range(self.system.rank) if indices is None else indices
        values = self.fundamental
        for index in chosen:
            value = values[index]
            if not is_numeric(value):
                return False
            number = to_rational(value)
            if number < 0 or number.denominator != 1:
                return False
        return True

    def is_zero(self) -> bool:
        return not any(self.simple)

    def __add__(self, other: Weight) -> Weight:
        self._check(other)
        return Weight(self.system, [a + b for a, b in zip(self.simple, other.simple)], self.basis)

    def __sub__(self, other: Weight) -> Weight:
        self._check(other)
        return Weight(self.system, [a - b for a, b in zip(self.simple, other.simple)], self.basis)

    def __neg__(self) -> Weight:
        return Weight(self.system, [-a for a in self.simple], self.basis)

    def __mul__(self, factor: object) -> Weight:
        scale = lift(factor)
        return Weight(self.system, [a * scale for a in self.simple], self.basis)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Weight):
            return NotImplemented
        return self.system == other.system and self.simple == other.simple

    def __hash__(self) -> int:
        return hash((self.system.name, self.simple))

    def __repr__(self) -> str:
        return f"Weight({self.system.name}, {self.format()})"

    def format(self, style: Style = "text", basis: Basis | None = None) -> str:
        """Render as a combination such as ``x1ω1+ω2`` or ``(x3+1)ψ1``."""

        basis = basis or self.basis
        if basis is Basis.FUNDAMENTAL:
            coords, symbol = self.fundamental, self.system.weight_symbol
        elif basis is Basis.SIMPLE_ROOT:
            coords, symbol = self.simple, self.system.root_symbol
        else:
            coords, symbol = self.epsilon, "ε"
        if style == "latex":
            symbol = _LATEX_SYMBOLS.get(symbol, symbol)
        pieces = []
        for index, value in enumerate(coords):
            if not value:
                continue
            label = f"{symbol}_{{{index + 1}}}" if style == "latex" else f"{symbol}{index + 1}"
            piece = format_coefficient(value, style) + label
            if pieces and not piece.startswith("-"):
                piece = "+" + piece
            pieces.append(piece)
        return "".join(pieces) or "0"

    def to_json(self) -> dict[str, object]:
        return {
            "system": self.system.name,
            "fundamental": [format_scalar(c) for c in self.fundamental],
            "simple": [format_scalar(c) for c in self.simple],
            "text": self.format(),
        }

    def _check(self, other: Weight) -> None:
        if self.system != other.system:
            raise UsageError(f"cannot combine {self.system.name} and {other.system.name} weights")


@dataclass(frozen=True, slots=True)
class WeylElement:
    """Weyl group element as a reduced word and its matrix on fundamental coordinates."""

    word: tuple[int, ...]
    matrix: tuple[tuple[int, ...], ...]

    @property
    def length(self) -> int:
        return len(self.word)

    @property
    def sign(self) -> int:
        return -1 if self.length % 2 else 1

    def act(self, weight: Weight) -> Weight:
        coords = weight.fundamental
        image = [
            sum((lift(entry) * c for entry, c in zip(row, coords) if entry), FIELD.zero)
            for row in self.matrix
        ]
        return Weight.from_fundamental(weight.system, image).in_basis(weight.basis)


def cartan_matrix(family: str, rank: int) -> tuple[tuple[int, ...], ...]:
    """Cartan matrix ``A_ij = <alpha_i, alpha_j^vee>`` of the given type."""

    form = _form(family, rank)
    return tuple(
        tuple(to_int(2 * form[i][j] / form[j][j]) for j in range(rank)) for i in range(rank)
    )


@cache
def root_system(family: str, rank: int) -> RootSystem:
    """Build a simple root system, e.g. ``root_system("B", 3)``."""

    family = family.upper()
    form = _form(family, rank)
    cartan = cartan_matrix(family, rank)
    weight_symbol, root_symbol, ascii_name = ("ψ", "α", "psi") if family == "G" else ("ω", "η", "w")
    return RootSystem(
        family=family,
        rank=rank,
        cartan=cartan,
        form=form,
        positive_roots=_positive_roots(cartan),
        weight_symbol=weight_symbol,
        root_symbol=root_symbol,
        weight_ascii=ascii_name,
        epsilon_matrix=_epsilon_matrix(family, rank),
    )


def parse_system(name: str) -> RootSystem:
    """Parse ``"B3"``, ``"G2"``, ``"so7"``-free type labels into a root system."""

    text = name.strip().upper()
    if len(text) < 2 or not text[1:].isdigit():
        raise UnsupportedTypeError(f"cannot parse Cartan type {name!r}")
    return root_system(text[0], int(text[1:]))


def bilinear(first: Weight, second: Weight) -> Scalar:
    return first.pairing(second)


def rho(system: RootSystem, levi: Iterable[int] | None = None) -> Weight:
    return system.rho(levi)


def weyl_group(system: RootSystem, levi: Iterable[int] | None = None) -> tuple[WeylElement, ...]:
    """All elements of the (Levi) Weyl group, identity first, by breadth-first search."""

    generators = tuple(range(system.rank)) if levi is None else tuple(sorted(set(levi)))
    return _weyl_group(system, generators)


def longest_word(cartan: Sequence[Sequence[int]]) -> tuple[int, ...]:
    """Lexicographically smallest reduced word of the longest element.

    Indices are positions in ``cartan``.
    """

    size = len(cartan)
    vector = [-1] * size
    word: list[int] = []
    while True:
        index = next((i for i, value in enumerate(vector) if value < 0), None)
        if index is None:
            return tuple(word)
        word.append(index)
        value = vector[index]
        vector = [v - value * cartan[index][j] for j, v in enumerate(vector)]


def weyl_dimension(weight: Weight, levi: Iterable[int] | None = None) -> int:
    """Weyl dimension formula for a dominant integral weight."""

    system = weight.system
    indices = tuple(range(system.rank)) if levi is None else tuple(sorted(set(levi)))
    if not weight.is_dominant_integral(indices):
        raise UsageError(f"{weight.format()} is not dominant integral")
    shifted = weight + system.rho(indices)
    base = system.rho(indices)
    numerator = QQ(1)
    denominator = QQ(1)
    for root in system.levi_positive_roots(indices):
        root_weight = Weight.from_simple(system, root)
        numerator *= to_rational(shifted.pairing(root_weight))
        denominator *= to_rational(base.pairing(root_weight))
    return to_int(numerator / denominator)


def parse_weight(system: RootSystem, text: str) -> Weight:
    """Parse ``"x1*w1 + w2"`` (or ``psi1``/``omega1``) into a weight."""

    names = [f"{system.weight_ascii}{i + 1}" for i in range(system.rank)]
    alternates = {f"omega{i + 1}": names[i] for i in range(system.rank)}
    symbols = {name: Symbol(name) for name in (*names, *VARIABLES)}
    for alias, target in alternates.items():
        symbols[alias] = symbols[target]
    try:
        expr = expand(sympify(text, locals=symbols))
    except Exception as exc:  # sympify raises many types
        raise UsageError(f"cannot parse weight {text!r}: {exc}") from exc
    basis = [symbols[name] for name in names]
    allowed = set(basis) | {symbols[name] for name in VARIABLES}
    unknown = {str(sym) for sym in expr.free_symbols if sym not in allowed}
    if unknown:
        raise UsageError(f"unknown symbols in weight {text!r}: {', '.join(sorted(unknown))}")
    coords = []
    remainder = expr
    for sym in basis:
        coeff = expand(expr).coeff(sym)
        if coeff.free_symbols & set(basis):
            raise UsageError(f"weight {text!r} is not linear in {', '.join(names)}")
        coords.append(FIELD.from_expr(coeff) if coeff != 0 else FIELD.zero)
        remainder -= coeff * sym
    if expand(remainder) != 0:
        raise UsageError(f"weight {text!r} has a part outside the span of {', '.join(names)}")
    return Weight.from_fundamental(system, coords)


_LATEX_SYMBOLS = {"ω": "\\omega", "ψ": "\\psi", "η": "\\eta", "α": "\\alpha", "ε": "\\varepsilon"}


def _form(family: str, rank: int) -> tuple[tuple[Rational, ...], ...]:
    family = family.upper()
    lengths = [2] * rank
    edges: dict[tuple[int, int], int] = {}
    chain = [(i, i + 1) for i in range(rank - 1)]
    if family == "A" and rank >= 1:
        edges = dict.fromkeys(chain, -1)
    elif family == "B" and rank >= 2:
        lengths[-1] = 1
        edges = dict.fromkeys(chain, -1)
    elif family == "C" and rank >= 2:
        lengths[-1] = 4
        edges = dict.fromkeys(chain, -1)
        edges[(rank - 2, rank - 1)] = -2
    elif family == "D" and rank >= 3:
        edges = dict.fromkeys(chain[:-1], -1)
        edges[(rank - 3, rank - 1)] = -1
    elif family == "E" and rank in (6, 7, 8):
        edges = {(0, 2): -1, (1, 3): -1}
        edges.update(dict.fromkeys([(i, i + 1) for i in range(2, rank - 1)], -1))
    elif family == "F" and rank == 4:
        lengths = [4, 4, 2, 2]
        edges = {(0, 1): -2, (1, 2): -2, (2, 3): -1}
    elif family == "G" and rank == 2:
        lengths = [2, 6]
        edges = {(0, 1): -3}
    else:
        raise UnsupportedTypeError(f"no simple Lie algebra of type {family}{rank}")
    rows = [[QQ(0)] * rank for _ in range(rank)]
    for i, length in enumerate(lengths):
        rows[i][i] = QQ(length)
    for (i, j), value in edges.items():
        rows[i][j] = rows[j][i] = QQ(value)
    return tuple(tuple(row) for row in rows)


def _positive_roots(cartan: tuple[tuple[int, ...], ...]) -> tuple[tuple[int, ...], ...]:
    rank = len(cartan)
    simple = [tuple(1 if i == j else 0 for j in range(rank)) for i in range(rank)]
    found = set(simple)
    layer = list(simple)
    while layer:
        next_layer = []
        for root in layer:
            for i in range(rank):
                down = 0
                lowered = list(root)
                while True:
                    lowered[i] -= 1
                    if tuple(lowered) in found:
                        down += 1
                    else:
                        break
                pairing = sum(root[j] * cartan[j][i] for j in range(rank))
                if down - pairing > 0:
                    raised = tuple(c + (1 if j == i else 0) for j, c in enumerate(root))
                    if raised not in found:
                        found.add(raised)
                        next_layer.append(raised)
        layer = next_layer
    return tuple(sorted(found, key=lambda r: (sum(r), tuple(-c for c in r))))


def _epsilon_matrix(family: str, rank: int) -> tuple[tuple[Rational, ...], ...] | None:
    if family not in ("B", "C", "D"):
        return None
    rows = []
    for i in range(rank - 1):
        row = [QQ(0)] * rank
        row[i], row[i + 1] = QQ(1), QQ(-1)
        rows.append(row)
    last = [QQ(0)] * rank
    if family == "B":
        last[-1] = QQ(1)
    elif family == "C":
        last[-1] = QQ(2)
    else:
        last[-2], last[-1] = QQ(1), QQ(1)
    rows.append(last)
    return tuple(tuple(row) for row in rows)


@cache
def _inverse_cartan(system: RootSystem) -> tuple[tuple[Rational, ...], ...]:
    return inverse_rational(system.cartan)


@cache
def _inverse_epsilon(system: RootSystem) -> tuple[tuple[Rational, ...], ...]:
    assert system.epsilon_matrix is not None
    return inverse_rational(system.epsilon_matrix)


@cache
def _weyl_group(system: RootSystem, generators: tuple[int, ...]) -> tuple[WeylElement, ...]:
    rank = system.rank
    identity = tuple(tuple(1 if i == j else 0 for j in range(rank)) for i in range(rank))
    reflections = {i: _reflection(system.cartan, i) for i in generators}
    seen = {identity: ()}
    order = [identity]
    queue = deque([identity])
    while queue:
        current = queue.popleft()
        for i in generators:
            image = _matmul(reflections[i], current)
            if image not in seen:
                seen[image] = (i, *seen[current])
                order.append(image)
                queue.append(image)
    return tuple(WeylElement(seen[matrix], matrix) for matrix in order)


def _reflection(cartan: Sequence[Sequence[int]], index: int) -> tuple[tuple[int, ...], ...]:
    # a -> a - a_index * A[index], as a matrix acting on column vectors
    size = len(cartan)
    return tuple(
        tuple((1 if i == j else 0) - (cartan[index][i] if j == index else 0) for j in range(size))
        for i in range(size)
    )


def _matmul(
    left: Sequence[Sequence[int]], right: Sequence[Sequence[int]]
) -> tuple[tuple[int, ...], ...]:
    size = len(left)
    return tuple(
        tuple(sum(left[i][k] * right[k][j] for k in range(size)) for j in range(size))
        for i in range(size)
    )


def _row_times(vector: Sequence[object], matrix: Sequence[Sequence[object]]) -> list[Scalar]:
    size = len(matrix[0]) if matrix else 0
    result = [FIELD.zero] * size
    for i, value in enumerate(vector):
        if not value:
            continue
        scalar = lift(value)
        for j in range(size):
            entry = matrix[i][j]
            if entry:
                result[j] += scalar * entry
    return result