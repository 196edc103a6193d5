"""Generalized Verma modules U(g) (x)_{U(p)} V and the action of U(g) on them.

Vectors are stored on the basis ``(n_- monomial) (x) (inducing basis vector)``, where a
monomial is a nondecreasing tuple of positive root numbers k standing for g_{-k}.
Coefficients are polynomials in the weight parameters.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field
from math import comb

import structlog

from ..algebra.exact import (
    FIELD,
    QQ,
    RING,
    Poly,
    Rational,
    Style,
    as_poly,
    format_coefficient,
    lift,
    normalize_vector,
    poly_to_json,
)
from ..algebra.lie import ChevalleyAlgebra, Generator, LieElement, format_generator
from ..algebra.roots import Weight
from ..algebra.uea import UEAElement
from ..errors import ConstructionError, UsageError
from ..modules.finite import FiniteModule, attach_vacuum, build_fd_module
from .parabolic import ParabolicSubalgebra

LOG = structlog.get_logger(__name__)

Monomial = tuple[int, ...]
Key = tuple[Monomial, int]


@dataclass(frozen=True, slots=True)
class VermaVector:
    terms: Mapping[Key, Poly] = field(default_factory=dict)

    @classmethod
    def of(cls, items: Iterable[tuple[Key, object]]) -> VermaVector:
        data: dict[Key, Poly] = {}
        for key, coeff in items:
            total = data.get(key, RING.zero) + as_poly(coeff)
            if total:
                data[key] = total
            else:
                data.pop(key, None)
        return cls(data)

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: VermaVector) -> VermaVector:
        return VermaVector.of([*self.terms.items(), *other.terms.items()])

    def __sub__(self, other: VermaVector) -> VermaVector:
        return self + other.scaled(-1)

    def scaled(self, factor: object) -> VermaVector:
        factor = as_poly(lift(factor))
        return VermaVector.of((key, coeff * factor) for key, coeff in self.terms.items())

    def keys(self) -> list[Key]:
        return sorted(self.terms, key=_key_order)

    def normalized(self) -> VermaVector:
        """Integral polynomial coefficients of content one, first coefficient positive."""

        keys = self.keys()
        if not keys:
            return self
        coeffs = normalize_vector([FIELD(self.terms[k]) for k in keys])
        return VermaVector(dict(zip(keys, coeffs, strict=True)))

    def proportional_to(self, other: VermaVector) -> bool:
        """True when the vectors differ by a nonzero rational function factor."""

        if set(self.terms) != set(other.terms):
            return False
        if not self.terms:
            return True
        first = self.keys()[0]
        ratio = FIELD(self.terms[first]) / FIELD(other.terms[first])
        return all(FIELD(self.terms[k]) == ratio * FIELD(other.terms[k]) for k in self.terms)


class GeneralizedVerma:
    """The module induced from an irreducible Levi module; acts by exact rewriting."""

    def __init__(
        self,
        parabolic: ParabolicSubalgebra,
        highest_weight: Weight,
        inducing: FiniteModule | None = None,
    ) -> None:
        self.parabolic = parabolic
        self.algebra: ChevalleyAlgebra = parabolic.algebra
        self.highest_weight = highest_weight
        self.inducing = inducing or build_fd_module(parabolic.levi, highest_weight)
        self.nilradical = frozenset(parabolic.nilradical_roots)
        self._generators = frozenset(self.algebra.generators)
        self._lmul_cache: dict[tuple[int, Monomial], dict[Monomial, Rational]] = {}
        self._act_cache: dict[tuple[Generator, Monomial, int], dict[Key, Poly]] = {}
        self._base_cache: dict[tuple[Generator, int], dict[Key, Poly]] = {}

    def __repr__(self) -> str:
        return (
            f"GeneralizedVerma({self.algebra.system.name}, p={self.parabolic.label}, "
            f"λ={self.highest_weight.format()})"
        )

    @property
    def top_index(self) -> int:
        return self.inducing.top_index

    def highest_vector(self) -> VermaVector:
        return VermaVector({((), self.top_index): RING.one})

    def inducing_vector(self, coords: Mapping[int, object]) -> VermaVector:
        """Embed a vector of the inducing module at PBW degree zero."""

        return VermaVector.of((((), index), lift(c)) for index, c in coords.items())

    def dimension_of_degree(self, degree: int) -> int:
        """Dimension of the PBW degree ``degree`` part."""

        count = len(self.nilradical)
        if degree < 0:
            return 0
        return comb(count + degree - 1, degree) * self.inducing.dimension

    def weight_of(self, key: Key) -> Weight:
        monomial, index = key
        system = self.algebra.system
        total = [0] * system.rank
        for number in monomial:
            total = [t + c for t, c in zip(total, system.positive_roots[number - 1], strict=True)]
        return self.inducing.weight(index) - Weight.from_simple(system, total)

    def act(self, element: UEAElement | LieElement | Generator, vector: VermaVector) -> VermaVector:
        """Apply an element of U(g); words act letter by letter from the right."""

        if isinstance(element, tuple):
            return VermaVector(self._apply(element, dict(vector.terms)))
        if isinstance(element, LieElement):
            element = UEAElement.from_lie(element)
        total: dict[Key, Poly] = {}
        for word, coeff in element.terms.items():
            current = dict(vector.terms)
            for letter in reversed(word):
                if letter not in self._generators:
                    raise UsageError(f"{letter} is not a generator of {self.algebra.system.name}")
                current = self._apply(letter, current)
                if not current:
                    break
            factor = as_poly(coeff)
            for key, value in current.items():
                _accumulate(total, key, value * factor)
        return VermaVector(total)

    def as_uea(self, vector: VermaVector) -> UEAElement:
        """An element u of U(g) with u . v_lambda equal to ``vector``."""

        return UEAElement.of(
            (
                tuple(("g", -number) for number in monomial) + self.inducing.basis[index].word,
                FIELD(coeff),
            )
            for (monomial, index), coeff in vector.terms.items()
        )

    def format_vector(self, vector: VermaVector, style: Style = "text") -> str:
        symbol = self.algebra.symbol
        pieces = []
        for key in vector.keys():
            monomial, index = key
            letters = _format_monomial(monomial, symbol, style)
            body = attach_vacuum(letters + self.inducing.basis[index].letters(symbol, style), style)
            piece = format_coefficient(FIELD(vector.terms[key]), style) + body
            if pieces and not piece.startswith("-"):
                piece = "+" + piece
            pieces.append(piece)
        return "".join(pieces) or "0"

    def vector_to_json(self, vector: VermaVector) -> list[dict[str, object]]:
        symbol = self.algebra.symbol
        return [
            {
                "pbw": [-number for number in key[0]],
                "basis": key[1],
                "basis_word": self.inducing.basis[key[1]].format(symbol),
                "coeff": poly_to_json(vector.terms[key]),
            }
            for key in vector.keys()
        ]

    def _apply(self, gen: Generator, terms: Mapping[Key, Poly]) -> dict[Key, Poly]:
        result: dict[Key, Poly] = {}
        for (monomial, index), coeff in terms.items():
            for key, value in self._act_generator(gen, monomial, index).items():
                _accumulate(result, key, value * coeff)
        return result

    def _lmul(self, number: int, monomial: Monomial) -> dict[Monomial, Rational]:
        """g_{-number} times a PBW monomial of n_-, rewritten in PBW order."""

        cache_key = (number, monomial)
        cached = self._lmul_cache.get(cache_key)
        if cached is not None:
            return cached
        if not monomial or number <= monomial[0]:
            result = {(number, *monomial): QQ(1)}
        else:
            first, rest = monomial[0], monomial[1:]
            result = {}
            for tail, value in self._lmul(number, rest).items():
                _accumulate_rational(result, (first, *tail), value)
            bracket = self.algebra.bracket_generators(("g", -number), ("g", -first))
            for gen, coeff in bracket.items():
                if gen[0] != "g" or -gen[1] not in self.nilradical:
                    raise ConstructionError(f"n_- is not closed under brackets at {gen}")
                for tail, value in self._lmul(-gen[1], rest).items():
                    _accumulate_rational(result, tail, coeff * value)
        self._lmul_cache[cache_key] = result
        return result

    def _act_generator(self, gen: Generator, monomial: Monomial, index: int) -> dict[Key, Poly]:
        cache_key = (gen, monomial, index)
        cached = self._act_cache.get(cache_key)
        if cached is not None:
            return cached
        kind, number = gen
        if kind == "g" and number < 0 and -number in self.nilradical:
            result = {
                (tail, index): as_poly(value) for tail, value in self._lmul(-number, monomial).items()
            }
        elif not monomial:
            result = self._inducing_action(gen, index)
        else:
            first, rest = monomial[0], monomial[1:]
            result = {}
            for (tail, target), value in self._act_generator(gen, rest, index).items():
                for product, factor in self._lmul(first, tail).items():
                    _accumulate(result, (product, target), value * factor)
            for inner, coeff in self.algebra.bracket_generators(gen, ("g", -first)).items():
                for key, value in self._act_generator(inner, rest, index).items():
                    _accumulate(result, key, value * coeff)
        self._act_cache[cache_key] = result
        return result

    def _inducing_action(self, gen: Generator, index: int) -> dict[Key, Poly]:
        cache_key = (gen, index)
        cached = self._base_cache.get(cache_key)
        if cached is not None:
            return cached
        kind, number = gen
        if kind == "h":
            value = self.algebra.cartan_value(gen, self.inducing.weight(index))
            result = {((), index): as_poly(value)} if value else {}
        elif number > 0 and number in self.nilradical:
            result = {}
        else:
            column = self.inducing.action(gen).column(index)
            result = {((), row): as_poly(value) for row, value in column.items()}
        self._base_cache[cache_key] = result
        return result


def _accumulate(target: dict[Key, Poly], key: Key, value: Poly) -> None:
    total = target.get(key, RING.zero) + value
    if total:
        target[key] = total
    else:
        target.pop(key, None)


def _accumulate_rational(target: dict[Monomial, Rational], key: Monomial, value: Rational) -> None:
    total = target.get(key, QQ(0)) + value
    if total:
        target[key] = total
    else:
        target.pop(key, None)


def _key_order(key: Key) -> tuple[object, ...]:
    monomial, index = key
    return (-len(monomial), monomial, index)


def _format_monomial(monomial: Monomial, symbol: str, style: Style) -> str:
    pieces = []
    position = 0
    while position < len(monomial):
        number = monomial[position]
        run = 1
        while position + run < len(monomial) and monomial[position + run] == number:
            run += 1
        exponent = ""
        if run > 1:
            exponent = f"^{{{run}}}" if style == "latex" else f"^{run}"
        pieces.append(format_generator(("g", -number), symbol, style) + exponent)
        position += run
    return "".join(pieces)
