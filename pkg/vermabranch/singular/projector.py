"""Singular vectors from Casimir projectors applied to top-level vectors."""

from __future__ import annotations

from collections.abc import Mapping, Sequence
from dataclasses import dataclass

import structlog

from ..algebra.casimir import casimir_quadratic
from ..algebra.embedding import Embedding
from ..algebra.exact import Scalar, format_scalar, to_int, to_rational
from ..algebra.roots import Weight
from ..branching.parabolic import induced_bar_parabolic
from ..branching.verma import GeneralizedVerma, VermaVector
from ..modules.characters import Constituent, decompose_over_bar_levi, fd_singular_vectors
from .conditions import ConditionBError, p1_scalar

LOG = structlog.get_logger(__name__)


@dataclass(frozen=True, slots=True)
class VerificationReport:
    weight: Weight | None
    generators: tuple[tuple[str, bool], ...]
    weights_agree: bool

    @property
    def passed(self) -> bool:
        return self.weights_agree and all(ok for _, ok in self.generators)

    def to_json(self) -> dict[str, object]:
        return {
            "weight": self.weight.format() if self.weight is not None else None,
            "generators": {name: ok for name, ok in self.generators},
            "weights_agree": self.weights_agree,
            "passed": self.passed,
        }


@dataclass(frozen=True, slots=True)
class SingularVectorResult:
    highest: Weight
    weight: Weight
    vector: VermaVector
    factors: tuple[tuple[Weight, Scalar], ...]
    verification: VerificationReport
    anomaly: str | None = None

    def to_json(self, verma: GeneralizedVerma) -> dict[str, object]:
        return {
            "lambda": self.highest.format(),
            "mu": self.weight.format(),
            "vector": verma.format_vector(self.vector),
            "terms": verma.vector_to_json(self.vector),
            "projector_factors": [
                {"nu": nu.format(), "p1": format_scalar(value)} for nu, value in self.factors
            ],
            "verified": self.verification.passed,
            "anomaly": self.anomaly,
        }


def level(verma: GeneralizedVerma, embedding: Embedding, weight: Weight) -> int:
    """Depth of ``weight`` below pr(lambda) measured by the grading element of pbar."""

    bar = induced_bar_parabolic(verma.parabolic, embedding)
    return to_int(to_rational(bar.depth(embedding.pr(verma.highest_weight) - weight)))


def build_singular_vector(
    verma: GeneralizedVerma,
    embedding: Embedding,
    weight: Weight,
    fd_vector: Mapping[int, object],
    constituents: Sequence[Constituent] | None = None,
) -> SingularVectorResult:
    """Apply prod (i(c1) - p1(nu)) over constituents nu above ``weight`` to 1 (x) fd_vector.

    Raises ``ConditionBError`` when one of those constituents has the same Casimir scalar.
    """

    if constituents is None:
        bar = induced_bar_parabolic(verma.parabolic, embedding)
        constituents = decompose_over_bar_levi(verma.inducing, embedding, bar.levi)
    own_level = level(verma, embedding, weight)
    above = sorted(
        {c.weight for c in constituents if level(verma, embedding, c.weight) < own_level},
        key=lambda nu: (level(verma, embedding, nu), nu.format()),
    )
    own = p1_scalar(embedding, weight)
    factors = []
    for nu in above:
        value = p1_scalar(embedding, nu)
        if value == own:
            raise ConditionBError(
                f"p1({nu.format()}) = p1({weight.format()}) = {format_scalar(own)}"
            )
        factors.append((nu, value))
    casimir = embedding.embed_uea(casimir_quadratic(embedding.source))
    vector = verma.inducing_vector(fd_vector)
    for nu, value in factors:
        vector = verma.act(casimir, vector) - vector.scaled(value)
        LOG.debug("projector factor applied", nu=nu.format(), terms=len(vector.terms))
    anomaly = None
    if vector.is_zero():
        anomaly = "projector annihilated the top-level vector"
        LOG.warning("singular vector vanished", mu=weight.format())
    vector = vector.normalized()
    verification = verify_singular(verma, vector, embedding)
    LOG.info(
        "singular vector built",
        mu=weight.format(),
        factors=len(factors),
        verified=verification.passed,
    )
    return SingularVectorResult(
        verma.highest_weight, weight, vector, tuple(factors), verification, anomaly
    )


def verify_singular(
    verma: GeneralizedVerma, vector: VermaVector, embedding: Embedding
) -> VerificationReport:
    """Check that the raising simple generators of the source kill the vector."""

    source = embedding.source
    checks = []
    for index in range(source.rank):
        gen = source.simple_generator(index)
        image = embedding.image(gen)
        checks.append((source.format_generator(gen), verma.act(image, vector).is_zero()))
    weights = {embedding.pr(verma.weight_of(key)) for key in vector.terms}
    weight = next(iter(weights)) if len(weights) == 1 else None
    return VerificationReport(weight, tuple(checks), len(weights) == 1)


def top_level_singular_vectors(
    verma: GeneralizedVerma, embedding: Embedding
) -> list[SingularVectorResult]:
    """One singular vector per fd-singular vector of each constituent, highest level first."""

    bar = induced_bar_parabolic(verma.parabolic, embedding)
    constituents = decompose_over_bar_levi(verma.inducing, embedding, bar.levi)
    weights = sorted(
        {c.weight for c in constituents},
        key=lambda w: (level(verma, embedding, w), w.format()),
    )
    results = []
    for weight in weights:
        for fd_vector in fd_singular_vectors(verma.inducing, embedding, bar.levi, weight):
            results.append(build_singular_vector(verma, embedding, weight, fd_vector, constituents))
    return results
