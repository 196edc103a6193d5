"""Elements of universal enveloping algebras and PBW normal ordering."""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field
from functools import cache

from ..errors import UsageError
from .exact import (
    FIELD,
    QQ,
    Rational,
    Scalar,
    Style,
    format_coefficient,
    format_scalar,
    lift,
    scalar_to_json,
)
from .lie import ChevalleyAlgebra, Generator, LieElement, format_generator

Word = tuple[Generator, ...]


def pbw_key(gen: Generator) -> tuple[int, int]:
    """Negative root vectors first, then the Cartan part, then positive root vectors."""

    kind, number = gen
    if kind == "h":
        return (1, number)
    return (0, -number) if number < 0 else (2, number)


@dataclass(frozen=True, slots=True)
class UEAElement:
    """Linear combination of words in the Chevalley generators."""

    terms: Mapping[Word, Scalar] = field(default_factory=dict)

    @classmethod
    def of(cls, items: Iterable[tuple[Word, object]]) -> UEAElement:
        data: dict[Word, Scalar] = {}
        for word, coeff in items:
            word = tuple(word)
            total = data.get(word, FIELD.zero) + lift(coeff)
            if total:
                data[word] = total
            else:
                data.pop(word, None)
        return cls(data)

    @classmethod
    def word(cls, *letters: Generator, coefficient: object = 1) -> UEAElement:
        return cls.of([(letters, coefficient)])

    @classmethod
    def one(cls) -> UEAElement:
        return cls({(): FIELD.one})

    @classmethod
    def from_lie(cls, element: LieElement) -> UEAElement:
        return cls.of(((gen,), coeff) for gen, coeff in element.terms.items())

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def degree(self) -> int:
        return max((len(word) for word in self.terms), default=0)

    def __add__(self, other: UEAElement) -> UEAElement:
        return UEAElement.of([*self.terms.items(), *other.terms.items()])

    def __sub__(self, other: UEAElement) -> UEAElement:
        return self + other.scaled(-1)

    def __mul__(self, other: UEAElement) -> UEAElement:
        return UEAElement.of(
            (a + b, ca * cb) for a, ca in self.terms.items() for b, cb in other.terms.items()
        )

    def scaled(self, factor: object) -> UEAElement:
        factor = lift(factor)
        return UEAElement.of((word, coeff * factor) for word, coeff in self.terms.items())

    def transpose(self) -> UEAElement:
        """The anti-automorphism fixing the Cartan part and swapping g_k with g_-k."""

        return UEAElement.of(
            (tuple(_swap(letter) for letter in reversed(word)), coeff)
            for word, coeff in self.terms.items()
        )

    def weights(self, algebra: ChevalleyAlgebra) -> set[tuple[int, ...]]:
        """Root-lattice weights of the words, in simple coordinates."""

        found = set()
        for word in self.terms:
            total = [0] * algebra.rank
            for letter in word:
                total = [a + b for a, b in zip(total, algebra.root_of(letter), strict=True)]
            found.add(tuple(total))
        return found

    def format(self, symbol: str = "g", style: Style = "text") -> str:
        """Render with repeated letters collapsed to powers, e.g. ``-4g_{-3}^2+g_{-1}``."""

        pieces = []
        for word in sorted(self.terms, key=lambda w: (-len(w), [pbw_key(g) for g in w])):
            body = _format_word(word, symbol, style)
            coeff = self.terms[word]
            if body:
                piece = format_coefficient(coeff, style) + body
            else:
                piece = format_scalar(coeff, style)
            if pieces and not piece.startswith("-"):
                piece = "+" + piece
            pieces.append(piece)
        return "".join(pieces) or "0"

    def to_json(self) -> list[dict[str, object]]:
        return [
            {"word": [f"{kind}{number}" for kind, number in word], "coeff": scalar_to_json(c)}
            for word, c in self.terms.items()
        ]


class NormalOrdering:
    """Rewrites words into PBW order using ab = ba + [a, b]; results are memoized."""

    def __init__(self, algebra: ChevalleyAlgebra) -> None:
        self.algebra = algebra
        self._cache: dict[Word, dict[Word, Rational]] = {}

    def __call__(self, element: UEAElement) -> UEAElement:
        items = []
        for word, coeff in element.terms.items():
            for ordered, value in self.word(word).items():
                items.append((ordered, coeff * value))
        return UEAElement.of(items)

    def word(self, word: Word) -> dict[Word, Rational]:
        cached = self._cache.get(word)
        if cached is not None:
            return cached
        position = next(
            (i for i in range(len(word) - 1) if pbw_key(word[i]) > pbw_key(word[i + 1])), None
        )
        if position is None:
            result = {word: QQ(1)}
        else:
            left, right = word[position], word[position + 1]
            prefix, suffix = word[:position], word[position + 2 :]
            result = dict(self.word(prefix + (right, left) + suffix))
            for gen, value in self.algebra.bracket_generators(left, right).items():
                for ordered, inner in self.word(prefix + (gen,) + suffix).items():
                    total = result.get(ordered, QQ(0)) + value * inner
                    if total:
                        result[ordered] = total
                    else:
                        result.pop(ordered, None)
        self._cache[word] = result
        return result


@cache
def ordering_for(algebra: ChevalleyAlgebra) -> NormalOrdering:
    return NormalOrdering(algebra)


def normal_order(algebra: ChevalleyAlgebra, element: UEAElement) -> UEAElement:
    return ordering_for(algebra)(element)


def transpose(element: UEAElement) -> UEAElement:
    return element.transpose()


def check_letters(algebra: ChevalleyAlgebra, element: UEAElement) -> None:
    known = set(algebra.generators)
    for word in element.terms:
        for letter in word:
            if letter not in known:
                raise UsageError(f"{letter} is not a generator of {algebra.system.name}")


def _swap(letter: Generator) -> Generator:
    kind, number = letter
    return letter if kind == "h" else (kind, -number)


def _format_word(word: Word, symbol: str, style: Style) -> str:
    pieces = []
    index = 0
    while index < len(word):
        letter = word[index]
        run = 1
        while index + run < len(word) and word[index + run] == letter:
            run += 1
        exponent = ""
        if run > 1:
            exponent = f"^{{{run}}}" if style == "latex" else f"^{run}"
        pieces.append(format_generator(letter, symbol, style) + exponent)
        index += run
    return "".join(pieces)
