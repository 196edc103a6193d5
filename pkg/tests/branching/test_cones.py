"""Tests for cone feasibility and the discrete branching conditions."""

from __future__ import annotations

import pytest

from vermabranch.algebra.embedding import Embedding
from vermabranch.algebra.exact import QQ
from vermabranch.algebra.lie import ChevalleyAlgebra
from vermabranch.branching.cones import (
    quotient_weights,
    separating_functional,
    solve_inequalities,
    zero_in_cone,
)
from vermabranch.branching.parabolic import ParabolicSubalgebra


def test_solve_inequalities_finds_a_point_in_an_interval() -> None:
    rows = [((QQ(1),), QQ(1)), ((QQ(-1),), QQ(-3))]

    point = solve_inequalities(rows, 1)

    assert point == (QQ(1),)


def test_solve_inequalities_detects_infeasibility() -> None:
    rows = [((QQ(1),), QQ(1)), ((QQ(-1),), QQ(0))]

    assert solve_inequalities(rows, 1) is None


def test_separating_functional_is_positive_on_every_vector() -> None:
    vectors = [(QQ(1), QQ(0)), (QQ(0), QQ(1)), (QQ(1), QQ(1))]

    functional = separating_functional(vectors)

    assert functional is not None
    for vector in vectors:
        assert sum(h * c for h, c in zip(functional, vector)) >= 1


def test_zero_in_cone() -> None:
    assert zero_in_cone([(1, 0), (-1, 0)])
    assert zero_in_cone([(1, 1), (-1, 0), (0, -1)])
    assert not zero_in_cone([(1, 0), (0, 1)])
    assert not zero_in_cone([])


def test_quotient_weights_of_second_maximal_parabolic(
    embedding: Embedding, so7: ChevalleyAlgebra
) -> None:
    report = quotient_weights(ParabolicSubalgebra(so7, (0, 1, 0)), embedding)

    assert report.quotient_weights == ((-2, -1), (-1, -1))
    assert not report.finite_branching
    assert not report.zero_in_c


def test_quotient_is_empty_for_first_maximal_parabolic(
    embedding: Embedding, so7: ChevalleyAlgebra
) -> None:
    report = quotient_weights(ParabolicSubalgebra(so7, (1, 0, 0)), embedding)

    assert report.quotient_weights == ()
    assert len(report.nilradical_weights) == 5
    assert len(report.bar_nilradical_weights) == 5


@pytest.mark.parametrize(
    ("crossings", "expected"),
    [
        ((0, 0, 0), (True, True, True)),
        ((1, 0, 0), (True, False, True)),
        ((0, 1, 0), (True, True, False)),
        ((0, 0, 1), (True, False, False)),
        ((1, 1, 0), (True, False, False)),
        ((1, 0, 1), (True, True, False)),
        ((0, 1, 1), (True, False, False)),
        ((1, 1, 1), (True, True, False)),
    ],
)
def test_conditions_table(
    embedding: Embedding,
    so7: ChevalleyAlgebra,
    crossings: tuple[int, ...],
    expected: tuple[bool, bool, bool],
) -> None:
    report = quotient_weights(ParabolicSubalgebra(so7, crossings), embedding)

    assert (report.weakly_compatible, report.compatible, report.finite_branching) == expected
    assert report.condition_a


def test_report_json_is_plain(embedding: Embedding, so7: ChevalleyAlgebra) -> None:
    report = quotient_weights(ParabolicSubalgebra(so7, (0, 1, 0)), embedding)

    data = report.to_json()

    assert data["quotient_weights"] == [["-2", "-1"], ["-1", "-1"]]
    assert data["condition_a"] is True
