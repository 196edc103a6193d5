"""Standard parabolic subalgebras described by crossed simple roots."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from functools import cached_property

from ..algebra.embedding import Embedding
from ..algebra.exact import FIELD, Scalar
from ..algebra.lie import ChevalleyAlgebra, Generator
from ..algebra.roots import Weight
from ..errors import UsageError
from ..modules.finite import Levi


@dataclass(frozen=True, eq=False)
class ParabolicSubalgebra:
    """Parabolic with Levi generated by the uncrossed simple roots.

    ``crossings[i] == 1`` puts simple root i in the nilradical.
    """

    algebra: ChevalleyAlgebra
    crossings: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.crossings) != self.algebra.rank or any(c not in (0, 1) for c in self.crossings):
            raise UsageError(
                f"parabolic of {self.algebra.system.name} needs {self.algebra.rank} entries "
                f"from {{0,1}}, got {self.crossings}"
            )

    @property
    def label(self) -> str:
        return "(" + ",".join(str(c) for c in self.crossings) + ")"

    @cached_property
    def levi(self) -> Levi:
        return Levi(self.algebra, (i for i, c in enumerate(self.crossings) if c == 0))

    @cached_property
    def nilradical_roots(self) -> tuple[int, ...]:
        """1-based numbers of the positive roots in the nilradical."""

        levi = set(self.levi.positive_roots)
        return tuple(
            k for k in range(1, len(self.algebra.system.positive_roots) + 1) if k not in levi
        )

    @property
    def opposite_nilradical(self) -> tuple[Generator, ...]:
        return tuple(("g", -k) for k in self.nilradical_roots)

    def contains(self, gen: Generator) -> bool:
        kind, number = gen
        return kind == "h" or number > 0 or -number in self.levi.positive_roots

    def depth(self, weight: Weight) -> Scalar:
        """Sum of the crossed simple-root coordinates."""

        return sum(
            (c for c, crossed in zip(weight.simple, self.crossings, strict=True) if crossed),
            FIELD.zero,
        )


def parse_crossings(text: str | Sequence[int]) -> tuple[int, ...]:
    if isinstance(text, str):
        try:
            values = tuple(int(part) for part in text.replace("(", "").replace(")", "").split(","))
        except ValueError as exc:
            raise UsageError(f"cannot parse parabolic {text!r}") from exc
    else:
        values = tuple(text)
    return values


def induced_bar_parabolic(parabolic: ParabolicSubalgebra, embedding: Embedding) -> ParabolicSubalgebra:
    """The parabolic of the source algebra pulled back along the embedding.

    A negative simple root vector of the source lies in it exactly when every generator in
    the support of its image lies in ``parabolic``.
    """

    if parabolic.algebra is not embedding.target:
        raise UsageError("parabolic does not belong to the embedding's target algebra")
    source = embedding.source
    crossings = []
    for index in range(source.rank):
        image = embedding.image(source.simple_generator(index, -1))
        crossings.append(0 if all(parabolic.contains(gen) for gen in image.terms) else 1)
    return ParabolicSubalgebra(source, tuple(crossings))
