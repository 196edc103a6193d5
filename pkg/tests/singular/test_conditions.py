"""Tests for Casimir scalars and Condition B."""

from __future__ import annotations

import pytest

from vermabranch.algebra.embedding import Embedding
from vermabranch.algebra.exact import QQ, RING, parse_scalar
from vermabranch.algebra.lie import ChevalleyAlgebra
from vermabranch.algebra.roots import Weight, parse_weight
from vermabranch.singular.conditions import (
    ConditionBError,
    p1_scalar,
    require_strong_condition_b,
    strong_condition_b,
)

x1 = RING.gens[0]


def _simple(g2: ChevalleyAlgebra, first: str, second: str) -> Weight:
    return Weight.from_simple(g2.system, [parse_scalar(first), parse_scalar(second)])


def test_p1_on_fundamental_weights(embedding: Embedding, g2: ChevalleyAlgebra) -> None:
    assert p1_scalar(embedding, parse_weight(g2.system, "psi1")) == QQ(1, 2)
    assert p1_scalar(embedding, parse_weight(g2.system, "psi2")) == 1
    assert p1_scalar(embedding, parse_weight(g2.system, "0")) == 0


def test_p1_is_quadratic_in_the_parameter(embedding: Embedding, g2: ChevalleyAlgebra) -> None:
    value = p1_scalar(embedding, _simple(g2, "2*x1+3", "x1+2"))

    assert value == parse_scalar("1/12*x1**2+2/3*x1+1")


def test_distinct_numeric_scalars_satisfy_condition_b(
    embedding: Embedding, g2: ChevalleyAlgebra
) -> None:
    weights = [parse_weight(g2.system, "psi1"), parse_weight(g2.system, "psi2")]

    report = strong_condition_b(embedding, weights)

    assert report.holds
    assert report.inequalities == ()


def test_symbolic_difference_becomes_an_inequality(
    embedding: Embedding, g2: ChevalleyAlgebra
) -> None:
    weights = [_simple(g2, "2*x1+1", "x1+1"), _simple(g2, "2*x1+2", "x1+1")]

    report = strong_condition_b(embedding, weights)

    assert report.holds
    assert report.inequalities == (x1 + 1,)
    assert report.holds_at({"x1": 0})
    assert not report.holds_at({"x1": -1})
    assert report.to_json()["inequalities"] == ["x1+1 != 0"]


def test_repeated_weight_fails_condition_b(embedding: Embedding, g2: ChevalleyAlgebra) -> None:
    psi1 = parse_weight(g2.system, "psi1")

    report = strong_condition_b(embedding, [psi1, psi1])

    assert not report.holds
    assert report.failing_pairs == ((psi1, psi1),)
    assert not report.weak_holds


def test_dot_linked_weights_share_a_scalar(embedding: Embedding, g2: ChevalleyAlgebra) -> None:
    top = parse_weight(g2.system, "psi1")
    reflected = top - 2 * g2.system.simple_root(0)

    report = strong_condition_b(embedding, [top, reflected])

    assert report.scalars[0] == report.scalars[1]
    assert not report.holds
    assert any(link.always for link in report.linkages)


def test_required_condition_b_names_the_violated_inequality(
    embedding: Embedding, g2: ChevalleyAlgebra
) -> None:
    top = parse_weight(g2.system, "psi1")
    reflected = top - 2 * g2.system.simple_root(0)

    with pytest.raises(ConditionBError, match="strong Condition B fails") as excinfo:
        require_strong_condition_b(embedding, [top, reflected])

    message = str(excinfo.value)
    assert f"p1({top.format()}) != p1({reflected.format()})" in message
    assert message.endswith("both equal 1/2")


def test_required_condition_b_returns_the_report(embedding: Embedding, g2: ChevalleyAlgebra) -> None:
    weights = [parse_weight(g2.system, "psi1"), parse_weight(g2.system, "psi2")]

    report = require_strong_condition_b(embedding, weights)

    assert report.holds
    assert report.weights == tuple(weights)
