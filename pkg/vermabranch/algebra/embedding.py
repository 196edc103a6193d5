"""Embeddings of simple Lie algebras given by images of Chevalley generators."""

from __future__ import annotations

import itertools
from collections.abc import Mapping
from dataclasses import dataclass
from functools import cache

import structlog

from ..errors import ConstructionError, UsageError
from .exact import FIELD, QQ, Rational, inverse_rational, lift, to_rational
from .lie import ChevalleyAlgebra, Generator, LieElement, chevalley_algebra
from .roots import Weight
from .uea import UEAElement

LOG = structlog.get_logger(__name__)


@dataclass(frozen=True, slots=True, eq=False)
class Embedding:
    """An injective homomorphism ``source -> target`` with its weight projection."""

    source: ChevalleyAlgebra
    target: ChevalleyAlgebra
    images: Mapping[Generator, LieElement]
    cartan_images: tuple[tuple[Rational, ...], ...]
    projection: tuple[tuple[Rational, ...], ...]
    dynkin_index: Rational

    @property
    def name(self) -> str:
        return f"{self.source.system.name}->{self.target.system.name}"

    def image(self, gen: Generator) -> LieElement:
        try:
            return self.images[gen]
        except KeyError as exc:
            raise UsageError(f"{gen} is not a generator of {self.source.system.name}") from exc

    def embed_lie(self, element: LieElement) -> LieElement:
        total = LieElement()
        for gen, coeff in element.terms.items():
            total = total + self.image(gen).scaled(coeff)
        return total

    def embed_uea(self, element: UEAElement) -> UEAElement:
        """Substitute generator images letter by letter; no reordering happens."""

        total = UEAElement()
        for word, coeff in element.terms.items():
            product = UEAElement.one().scaled(coeff)
            for letter in word:
                product = product * UEAElement.from_lie(self.image(letter))
            total = total + product
        return total

    def pr(self, weight: Weight) -> Weight:
        """Restrict a target weight to the source Cartan subalgebra."""

        if weight.system != self.target.system:
            raise UsageError(f"{weight.format()} is not a {self.target.system.name} weight")
        coords = [
            sum((lift(row[k]) * c for k, c in enumerate(weight.simple) if row[k]), FIELD.zero)
            for row in self.projection
        ]
        return Weight.from_simple(self.source.system, coords).in_basis(weight.basis)

    def pr_root(self, coords: tuple[int, ...]) -> tuple[Rational, ...]:
        """Projection of an integral target root in source simple coordinates."""

        return tuple(
            sum((row[k] * c for k, c in enumerate(coords) if c), QQ(0)) for row in self.projection
        )

    def iota(self, index: int) -> Weight:
        """Image of source simple root ``index`` (0-based) in target simple coordinates."""

        return Weight.from_simple(self.target.system, self.cartan_images[index])


def build_embedding(
    source: ChevalleyAlgebra,
    target: ChevalleyAlgebra,
    simple_images: Mapping[Generator, LieElement],
) -> Embedding:
    """Extend images of the simple root vectors to every Chevalley generator and verify them."""

    images: dict[Generator, LieElement] = {}
    for index in range(source.rank):
        for sign in (1, -1):
            gen = source.simple_generator(index, sign)
            if gen not in simple_images:
                raise UsageError(f"missing image of {source.format_generator(gen)}")
            images[gen] = simple_images[gen]
    for number in range(1, len(source.system.positive_roots) + 1):
        if number not in source.derivations:
            continue
        index, rest, depth = source.derivations[number]
        raising = images[source.simple_generator(index)]
        lowering = images[source.simple_generator(index, -1)]
        images[("g", number)] = target.bracket(raising, images[("g", rest)]).scaled(QQ(1, depth))
        images[("g", -number)] = target.bracket(lowering, images[("g", -rest)]).scaled(
            QQ(-1, depth)
        )
    for index in range(source.rank):
        coroot = target.bracket(
            images[source.simple_generator(index)], images[source.simple_generator(index, -1)]
        )
        images[("h", index + 1)] = coroot.scaled(source.system.form[index][index] / 2)
    _check_homomorphism(source, target, images)
    cartan_images = _cartan_images(source, target, images)
    projection = _projection(source, target, cartan_images)
    dynkin = _dynkin_index(source, target, cartan_images)
    LOG.info("embedding verified", source=source.system.name, target=target.system.name)
    return Embedding(source, target, images, cartan_images, projection, dynkin)


@cache
def g2_in_so7() -> Embedding:
    """The G2 subalgebra of so(7) fixing a generic 3-form."""

    source = chevalley_algebra("G", 2, "ḡ")
    target = chevalley_algebra("B", 3, "g")
    images = {
        ("g", 1): LieElement.of([(("g", 1), 1), (("g", 3), 1)]),
        ("g", -1): LieElement.of([(("g", -1), 1), (("g", -3), 1)]),
        ("g", 2): LieElement.basis(("g", 2)),
        ("g", -2): LieElement.basis(("g", -2)),
    }
    return build_embedding(source, target, images)


def _check_homomorphism(
    source: ChevalleyAlgebra, target: ChevalleyAlgebra, images: Mapping[Generator, LieElement]
) -> None:
    for a, b in itertools.product(source.generators, repeat=2):
        expected = LieElement()
        for gen, coeff in source.bracket_generators(a, b).items():
            expected = expected + images[gen].scaled(coeff)
        actual = target.bracket(images[a], images[b])
        if (actual - expected).terms:
            raise ConstructionError(
                f"images do not preserve [{source.format_generator(a)}, "
                f"{source.format_generator(b)}]"
            )


def _cartan_images(
    source: ChevalleyAlgebra, target: ChevalleyAlgebra, images: Mapping[Generator, LieElement]
) -> tuple[tuple[Rational, ...], ...]:
    rows = []
    for index in range(source.rank):
        image = images[("h", index + 1)]
        if any(gen[0] != "h" for gen in image.terms):
            raise ConstructionError("Cartan subalgebra is not mapped into the Cartan subalgebra")
        rows.append(tuple(to_rational(image.coefficient(("h", k + 1))) for k in range(target.rank)))
    return tuple(rows)


def _projection(
    source: ChevalleyAlgebra,
    target: ChevalleyAlgebra,
    cartan_images: tuple[tuple[Rational, ...], ...],
) -> tuple[tuple[Rational, ...], ...]:
    # pr = F_source^-1 . C . F_target
    inverse = inverse_rational(source.system.form)
    form = target.system.form
    middle = [
        [sum((row[k] * form[k][j] for k in range(target.rank)), QQ(0)) for j in range(target.rank)]
        for row in cartan_images
    ]
    return tuple(
        tuple(
            sum((inverse[i][m] * middle[m][j] for m in range(source.rank)), QQ(0))
            for j in range(target.rank)
        )
        for i in range(source.rank)
    )


def _dynkin_index(
    source: ChevalleyAlgebra,
    target: ChevalleyAlgebra,
    cartan_images: tuple[tuple[Rational, ...], ...],
) -> Rational:
    values = set()
    for index, row in enumerate(cartan_images):
        length = sum(
            (row[i] * row[j] * target.system.form[i][j]
             for i in range(target.rank) for j in range(target.rank)),
            QQ(0),
        )
        values.add(length / source.system.form[index][index])
    if len(values) != 1:
        raise ConstructionError(f"embedding scales simple roots unevenly: {sorted(values)}")
    return values.pop()
