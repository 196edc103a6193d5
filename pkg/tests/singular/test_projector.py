"""Tests for singular vectors built by Casimir projectors."""

from __future__ import annotations

import pytest

from vermabranch.algebra.embedding import Embedding
from vermabranch.algebra.exact import parse_scalar
from vermabranch.algebra.lie import ChevalleyAlgebra
from vermabranch.algebra.roots import Weight, parse_weight
from vermabranch.algebra.uea import UEAElement
from vermabranch.branching.parabolic import ParabolicSubalgebra
from vermabranch.branching.verma import GeneralizedVerma
from vermabranch.regress import element_from_terms, in_span
from vermabranch.singular.conditions import ConditionBError
from vermabranch.singular.projector import (
    build_singular_vector,
    level,
    top_level_singular_vectors,
    verify_singular,
)


@pytest.fixture(scope="module")
def verma(so7: ChevalleyAlgebra) -> GeneralizedVerma:
    return GeneralizedVerma(ParabolicSubalgebra(so7, (1, 0, 0)), parse_weight(so7.system, "x1*w1+w3"))


def _simple(g2: ChevalleyAlgebra, first: str, second: str) -> Weight:
    return Weight.from_simple(g2.system, [parse_scalar(first), parse_scalar(second)])


def test_one_vector_per_constituent(
    verma: GeneralizedVerma, embedding: Embedding, g2: ChevalleyAlgebra
) -> None:
    results = top_level_singular_vectors(verma, embedding)

    assert [r.weight for r in results] == [
        _simple(g2, "2*x1+2", "x1+1"),
        _simple(g2, "2*x1+1", "x1+1"),
        _simple(g2, "2*x1", "x1"),
    ]
    assert all(r.verification.passed for r in results)
    assert all(r.anomaly is None for r in results)


def test_levels_grow_down_the_list(verma: GeneralizedVerma, embedding: Embedding) -> None:
    results = top_level_singular_vectors(verma, embedding)

    assert [level(verma, embedding, r.weight) for r in results] == [0, 1, 2]
    assert [len(r.factors) for r in results] == [0, 1, 2]


def test_printed_vector_matches_the_construction(
    verma: GeneralizedVerma, embedding: Embedding, g2: ChevalleyAlgebra
) -> None:
    printed = verma.act(
        element_from_terms((("-x1", "g-3"), ("1", "g-1"))), verma.highest_vector()
    )
    weight = _simple(g2, "2*x1+1", "x1+1")

    same = [r.vector for r in top_level_singular_vectors(verma, embedding) if r.weight == weight]

    assert verify_singular(verma, printed, embedding).passed
    assert in_span(same, printed)


def test_plain_lowering_is_not_singular(verma: GeneralizedVerma, embedding: Embedding) -> None:
    vector = verma.act(UEAElement.word(("g", -1)), verma.highest_vector())

    report = verify_singular(verma, vector, embedding)

    assert not report.passed
    assert report.weights_agree
    assert report.to_json()["passed"] is False


def test_result_json_lists_projector_factors(
    verma: GeneralizedVerma, embedding: Embedding
) -> None:
    result = top_level_singular_vectors(verma, embedding)[1]

    data = result.to_json(verma)

    assert data["verified"] is True
    assert data["projector_factors"] == [
        {"nu": result.factors[0][0].format(), "p1": "1/12x1^2+7/12x1+1/2"}
    ]


def test_coinciding_casimir_scalars_are_refused(
    so7: ChevalleyAlgebra, embedding: Embedding
) -> None:
    verma = GeneralizedVerma(ParabolicSubalgebra(so7, (1, 0, 0)), parse_weight(so7.system, "-w1+w3"))

    with pytest.raises(ConditionBError):
        top_level_singular_vectors(verma, embedding)


def test_top_weight_needs_no_projector(verma: GeneralizedVerma, embedding: Embedding) -> None:
    top = embedding.pr(verma.highest_weight)

    result = build_singular_vector(verma, embedding, top, {verma.top_index: 1})

    assert result.factors == ()
    assert result.vector == verma.highest_vector()
    assert result.verification.passed
