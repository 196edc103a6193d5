"""Tests for branching multiplicities and truncated character identities."""

from __future__ import annotations

import pytest

from vermabranch import goldens
from vermabranch.algebra.embedding import Embedding
from vermabranch.algebra.exact import evaluate, parse_scalar
from vermabranch.algebra.lie import ChevalleyAlgebra
from vermabranch.algebra.roots import Weight, parse_weight, root_system
from vermabranch.branching.multiplicity import (
    branch_up_to_degree,
    branching_multiplicity,
    character_identity,
    depth_dimensions,
    graded_decomposition,
    quasipoly_degree_bound,
    truncated_character,
)
from vermabranch.branching.parabolic import ParabolicSubalgebra, parse_crossings
from vermabranch.branching.partition import Multiplicity
from vermabranch.errors import ConstructionError, UsageError
from vermabranch.modules.characters import Character


def test_quasipolynomial_degree_bound() -> None:
    assert quasipoly_degree_bound(root_system("B", 3), root_system("G", 2)) == 1
    assert quasipoly_degree_bound(root_system("G", 2), root_system("G", 2)) is None


@pytest.mark.parametrize(
    ("crossings", "highest", "cutoff", "expected"),
    [
        ((1, 0, 0), "10*w1+w2", 2, {"10*psi1+psi2": 1, "11*psi1": 1, "9*psi1+psi2": 1}),
        ((0, 0, 0), "w3", 0, {"0": 1, "psi1": 1}),
        ((0, 0, 1), "w2+10*w3", 0, {"11*psi1": 1, "10*psi1+psi2": 1}),
    ],
)
def test_branch_up_to_degree(
    embedding: Embedding,
    so7: ChevalleyAlgebra,
    g2: ChevalleyAlgebra,
    crossings: tuple[int, ...],
    highest: str,
    cutoff: int,
    expected: dict[str, int],
) -> None:
    parabolic = ParabolicSubalgebra(so7, crossings)

    rows = branch_up_to_degree(parabolic, embedding, parse_weight(so7.system, highest), cutoff)

    got = {row.weight: row.multiplicity for row in rows}
    assert got == {
        parse_weight(g2.system, mu): Multiplicity.finite(count) for mu, count in expected.items()
    }


def test_finite_branching_stays_in_degree_zero(
    embedding: Embedding, so7: ChevalleyAlgebra
) -> None:
    parabolic = ParabolicSubalgebra(so7, (1, 0, 0))

    graded = graded_decomposition(parabolic, embedding, parse_weight(so7.system, "10*w1+w2"), 3)

    assert {c.degree for c in graded} == {0}


def test_multiplicity_of_a_single_weight(
    embedding: Embedding, so7: ChevalleyAlgebra, g2: ChevalleyAlgebra
) -> None:
    parabolic = ParabolicSubalgebra(so7, (1, 0, 0))
    highest = parse_weight(so7.system, "10*w1+w2")

    assert branching_multiplicity(
        parabolic, embedding, highest, parse_weight(g2.system, "11*psi1")
    ) == Multiplicity.finite(1)
    assert branching_multiplicity(
        parabolic, embedding, highest, parse_weight(g2.system, "-psi2")
    ) == Multiplicity.finite(0)


def test_multiplicity_needs_numeric_levi_coordinates(
    embedding: Embedding, so7: ChevalleyAlgebra, g2: ChevalleyAlgebra
) -> None:
    parabolic = ParabolicSubalgebra(so7, (1, 0, 0))

    with pytest.raises(UsageError):
        branching_multiplicity(
            parabolic,
            embedding,
            parse_weight(so7.system, "10*w1+w2"),
            parse_weight(g2.system, "psi1+x2*psi2"),
        )


def test_negative_cutoff_is_refused(embedding: Embedding, so7: ChevalleyAlgebra) -> None:
    parabolic = ParabolicSubalgebra(so7, (1, 0, 0))

    with pytest.raises(UsageError):
        branch_up_to_degree(parabolic, embedding, parse_weight(so7.system, "w2"), -1)


@pytest.mark.parametrize(("label", "highest", "cutoff"), goldens.CHARACTER_IDENTITIES)
def test_character_identity_holds(
    embedding: Embedding, so7: ChevalleyAlgebra, label: str, highest: str, cutoff: int
) -> None:
    parabolic = ParabolicSubalgebra(so7, parse_crossings(label))

    check = character_identity(parabolic, embedding, parse_weight(so7.system, highest), cutoff)

    assert check.holds
    lhs, rhs = check.dimensions()
    assert lhs == rhs


def _at_point(weight: Weight) -> Weight:
    point = {name: parse_scalar(value) for name, value in goldens.MULTIPLICITY_POINT.items()}
    return Weight(weight.system, [evaluate(c, point) for c in weight.simple], weight.basis)


@pytest.mark.parametrize("highest", sorted(goldens.P1_TABLE))
def test_branching_matches_levi_constituents(
    embedding: Embedding, so7: ChevalleyAlgebra, g2: ChevalleyAlgebra, highest: str
) -> None:
    parabolic = ParabolicSubalgebra(so7, (1, 0, 0))
    weight = _at_point(parse_weight(so7.system, highest))
    expected: dict[Weight, int] = {}
    for coords, _ in goldens.P1_TABLE[highest]:
        mu = _at_point(Weight.from_simple(g2.system, [parse_scalar(c) for c in coords]))
        expected[mu] = expected.get(mu, 0) + 1

    found = {
        mu: branching_multiplicity(parabolic, embedding, weight, mu) for mu in expected
    }

    assert found == {mu: Multiplicity.finite(count) for mu, count in expected.items()}


def test_truncated_geometric_series(g2: ChevalleyAlgebra) -> None:
    top = parse_weight(g2.system, "psi1")
    base = Character({top: 1})
    factor = -g2.system.root(1)

    character = truncated_character(base, [factor], top, 2)

    assert character.dimension == 3
    assert depth_dimensions(character, top, 2) == [1, 1, 1]


def test_truncation_rejects_raising_factors(g2: ChevalleyAlgebra) -> None:
    top = parse_weight(g2.system, "psi1")

    with pytest.raises(ConstructionError, match="does not lower"):
        truncated_character(Character({top: 1}), [g2.system.root(1)], top, 2)
