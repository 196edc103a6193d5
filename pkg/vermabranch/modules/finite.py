"""Finite-dimensional irreducible modules of Levi subalgebras in explicit bases.

A basis vector is a monomial in the lowering simple root vectors applied to the highest
weight vector; the exponents are the string parametrization of an LS path along the
lexicographically smallest reduced word of the longest Weyl group element. Action matrices
come from the contravariant form: the image of a basis vector is the solution of a Gram
system on the target weight space.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass
from functools import cached_property

import structlog

from ..algebra.exact import (
    FIELD,
    ExactMatrix,
    Scalar,
    SingularMatrixError,
    Style,
    format_coefficient,
    solve,
    to_int,
    to_rational,
)
from ..algebra.lie import ChevalleyAlgebra, Generator, LieElement, format_generator
from ..algebra.roots import RootSystem, Weight, weyl_dimension
from ..errors import ConstructionError, UsageError
from .crystal import PathCrystal

LOG = structlog.get_logger(__name__)

Word = tuple[Generator, ...]


class LeviWeightError(UsageError):
    """Raised when a weight is not dominant integral for the Levi subalgebra."""


class Levi:
    """Levi subalgebra spanned by the Cartan part and the roots supported on ``simple``."""

    def __init__(self, algebra: ChevalleyAlgebra, simple: Iterable[int]) -> None:
        self.algebra = algebra
        self.simple = tuple(sorted(set(simple)))

    def __repr__(self) -> str:
        labels = ",".join(str(i + 1) for i in self.simple)
        return f"Levi({self.algebra.system.name}; {{{labels}}})"

    @property
    def system(self) -> RootSystem:
        return self.algebra.system

    @cached_property
    def cartan(self) -> tuple[tuple[int, ...], ...]:
        matrix = self.algebra.system.cartan
        return tuple(tuple(matrix[i][j] for j in self.simple) for i in self.simple)

    @cached_property
    def positive_roots(self) -> tuple[int, ...]:
        """1-based numbers of the positive roots of the Levi."""

        system = self.algebra.system
        return tuple(system.root_number(r) for r in system.levi_positive_roots(self.simple))

    def contains(self, gen: Generator) -> bool:
        return gen[0] == "h" or abs(gen[1]) in self.positive_roots

    def local_weight(self, weight: Weight) -> tuple[int, ...]:
        """Fundamental coordinates of ``weight`` on the Levi simple roots."""

        if not weight.is_dominant_integral(self.simple):
            raise LeviWeightError(
                f"{weight.format()} is not dominant integral for {self!r}"
            )
        values = weight.fundamental
        return tuple(to_int(to_rational(values[i])) for i in self.simple)

    def rho(self) -> Weight:
        return self.algebra.system.rho(self.simple)


def levi_dimension(levi: Levi, weight: Weight) -> int:
    levi.local_weight(weight)
    return weyl_dimension(weight, levi.simple)


@dataclass(frozen=True, slots=True)
class BasisMonomial:
    word: Word
    string: tuple[int, ...]
    depth: tuple[int, ...]

    def letters(self, symbol: str = "g", style: Style = "text") -> str:
        return "".join(format_generator(gen, symbol, style) for gen in self.word)

    def format(self, symbol: str = "g", style: Style = "text") -> str:
        return attach_vacuum(self.letters(symbol, style), style)


def attach_vacuum(letters: str, style: Style = "text") -> str:
    """Append the highest weight vector, e.g. ``g_{-3}g_{-2}·v_λ``."""

    if style == "latex":
        return letters + ("\\cdot " if letters else "") + "v_{\\lambda}"
    return letters + ("·" if letters else "") + "v_λ"


@dataclass(frozen=True, slots=True, eq=False)
class FiniteModule:
    """Irreducible Levi module with exact action matrices on a monomial basis."""

    levi: Levi
    highest_weight: Weight
    basis: tuple[BasisMonomial, ...]
    actions: Mapping[Generator, ExactMatrix]

    @property
    def dimension(self) -> int:
        return len(self.basis)

    @property
    def top_index(self) -> int:
        return next(i for i, m in enumerate(self.basis) if not any(m.depth))

    def weight(self, index: int) -> Weight:
        depth = self.basis[index].depth
        system = self.levi.system
        return self.highest_weight - Weight.from_simple(system, depth)

    def action(self, gen: Generator) -> ExactMatrix:
        if gen in self.actions:
            return self.actions[gen]
        if gen[0] == "g" and gen[1] > 0:
            # nilradical of the parabolic acts trivially on the inducing module
            return ExactMatrix.zero(self.dimension, self.dimension)
        raise UsageError(f"{gen} does not act on {self.levi!r} modules")

    def act(self, element: LieElement) -> ExactMatrix:
        total = ExactMatrix.zero(self.dimension, self.dimension)
        for gen, coeff in element.terms.items():
            total = total + self.action(gen).scale(coeff)
        return total

    def format_vector(self, coords: Mapping[int, Scalar], style: Style = "text") -> str:
        pieces = []
        symbol = self.levi.algebra.symbol
        for index in sorted(coords):
            piece = format_coefficient(coords[index], style) + self.basis[index].format(
                symbol, style
            )
            if pieces and not piece.startswith("-"):
                piece = "+" + piece
            pieces.append(piece)
        return "".join(pieces) or "0"


class VacuumPairing:
    """Coefficient of v in word . v for a highest weight vector v of weight ``weight``.

    Positive letters kill v, Cartan letters act by the weight, and words with nonzero total
    weight contribute nothing.
    """

    def __init__(self, algebra: ChevalleyAlgebra, weight: Weight) -> None:
        self.algebra = algebra
        self.weight = weight
        self._cache: dict[Word, Scalar] = {}
        self._cartan = {gen: algebra.cartan_value(gen, weight) for gen in algebra.cartan_generators}

    def __call__(self, word: Word) -> Scalar:
        cached = self._cache.get(word)
        if cached is None:
            cached = self._cache[word] = self._evaluate(word)
        return cached

    def _evaluate(self, word: Word) -> Scalar:
        if not word:
            return FIELD.one
        first, last = word[0], word[-1]
        if (first[0] == "g" and first[1] < 0) or (last[0] == "g" and last[1] > 0):
            return FIELD.zero
        if any(sum(c) for c in zip(*(self.algebra.root_of(g) for g in word), strict=True)):
            return FIELD.zero
        position = max(i for i, g in enumerate(word) if g[0] == "h" or g[1] > 0)
        letter = word[position]
        if position == len(word) - 1:
            return self._cartan[letter] * self(word[:-1])
        after = word[position + 1]
        prefix, suffix = word[:position], word[position + 2 :]
        total = self(prefix + (after, letter) + suffix)
        for gen, coeff in self.algebra.bracket_generators(letter, after).items():
            total += coeff * self(prefix + (gen,) + suffix)
        return total


def build_fd_module(levi: Levi, highest: Weight) -> FiniteModule:
    """Irreducible module of the Levi with the given highest weight."""

    algebra = levi.algebra
    local = levi.local_weight(highest)
    basis = _monomial_basis(levi, local)
    expected = levi_dimension(levi, highest)
    if len(basis) != expected:
        raise ConstructionError(f"crystal has {len(basis)} elements, expected {expected}")
    pairing = VacuumPairing(algebra, highest)
    spaces: dict[tuple[int, ...], list[int]] = {}
    for index, monomial in enumerate(basis):
        spaces.setdefault(monomial.depth, []).append(index)
    grams = {depth: _gram(pairing, basis, members) for depth, members in spaces.items()}
    size = len(basis)
    actions: dict[Generator, ExactMatrix] = {}
    for simple in levi.simple:
        for sign in (1, -1):
            gen = algebra.simple_generator(simple, sign)
            entries = []
            for column, monomial in enumerate(basis):
                depth = list(monomial.depth)
                depth[simple] -= sign
                members = spaces.get(tuple(depth))
                if not members:
                    continue
                rhs = [
                    pairing(_transpose(basis[t].word) + (gen,) + monomial.word) for t in members
                ]
                if not any(rhs):
                    continue
                try:
                    coords = solve(grams[tuple(depth)], rhs)
                except SingularMatrixError as exc:
                    raise ConstructionError(
                        f"monomials of depth {tuple(depth)} are linearly dependent"
                    ) from exc
                entries.extend(((row, column), c) for row, c in zip(members, coords, strict=True))
            actions[gen] = ExactMatrix.build(size, size, entries)
    for number in levi.positive_roots:
        if number not in algebra.derivations:
            continue
        index, rest, depth = algebra.derivations[number]
        upper = algebra.simple_generator(index)
        lower = algebra.simple_generator(index, -1)
        actions[("g", number)] = actions[upper].commutator(actions[("g", rest)]).scale(
            FIELD.one / depth
        )
        actions[("g", -number)] = actions[lower].commutator(actions[("g", -rest)]).scale(
            -FIELD.one / depth
        )
    for gen in algebra.cartan_generators:
        actions[gen] = ExactMatrix.build(
            size,
            size,
            (((i, i), algebra.cartan_value(gen, highest - Weight.from_simple(levi.system, m.depth)))
             for i, m in enumerate(basis)),
        )
    LOG.debug("levi module built", levi=repr(levi), highest=highest.format(), dimension=size)
    return FiniteModule(levi, highest, basis, actions)


def _monomial_basis(levi: Levi, local: Sequence[int]) -> tuple[BasisMonomial, ...]:
    algebra = levi.algebra
    rank = algebra.rank
    if not levi.simple:
        return (BasisMonomial((), (), (0,) * rank),)
    crystal = PathCrystal(levi.cartan, local)
    word = crystal.longest_word()
    monomials = []
    for path in crystal.elements():
        string = crystal.string(path, word)
        letters: list[Generator] = []
        depth = [0] * rank
        for position, exponent in zip(word, string, strict=True):
            simple = levi.simple[position]
            letters.extend([algebra.simple_generator(simple, -1)] * exponent)
            depth[simple] += exponent
        monomials.append(BasisMonomial(tuple(letters), string, tuple(depth)))
    return tuple(sorted(monomials, key=_basis_key))


def _basis_key(monomial: BasisMonomial) -> tuple[object, ...]:
    # ascending weight: deeper first, then compare from the last simple coordinate
    depth = monomial.depth
    letters = tuple(-gen[1] for gen in monomial.word)
    return (-sum(depth), tuple(-d for d in reversed(depth)), letters)


def _gram(pairing: VacuumPairing, basis: Sequence[BasisMonomial], members: Sequence[int]) -> ExactMatrix:
    return ExactMatrix.from_rows(
        [[pairing(_transpose(basis[t].word) + basis[s].word) for s in members] for t in members]
    )


def _transpose(word: Word) -> Word:
    return tuple((kind, -number if kind == "g" else number) for kind, number in reversed(word))
