"""Tests for vector partition functions."""

from __future__ import annotations

import itertools

import pytest

from vermabranch import goldens
from vermabranch.algebra.embedding import Embedding
from vermabranch.algebra.lie import ChevalleyAlgebra
from vermabranch.branching.cones import quotient_weights
from vermabranch.branching.parabolic import ParabolicSubalgebra, parse_crossings
from vermabranch.branching.partition import (
    INFINITE,
    Multiplicity,
    PartitionContext,
    kostant_partition,
    naive_partition,
)
from vermabranch.errors import UsageError

QUOTIENT = [(-2, -1), (-1, -1)]


@pytest.mark.parametrize(("target", "expected"), [((-3, -2), 1), ((2, 1), 0), ((0, 0), 1)])
def test_partitions_by_quotient_weights(target: tuple[int, int], expected: int) -> None:
    context = PartitionContext.build(QUOTIENT)

    assert kostant_partition(context, target) == Multiplicity.finite(expected)


def test_agrees_with_brute_force() -> None:
    vectors = [(1, 0), (0, 1), (1, 1)]
    context = PartitionContext.build(vectors)

    assert kostant_partition(context, (2, 2)).count == naive_partition(vectors, (2, 2), 3) == 3


@pytest.mark.parametrize("label", goldens.PARTITION_SWEEP_PARABOLICS)
def test_quotient_partitions_agree_with_brute_force(
    embedding: Embedding, so7: ChevalleyAlgebra, label: str
) -> None:
    report = quotient_weights(ParabolicSubalgebra(so7, parse_crossings(label)), embedding)
    context = PartitionContext.build(report.quotient_weights)
    depth = goldens.PARTITION_SWEEP_DEPTH

    for a, b in itertools.product(range(depth + 1), repeat=2):
        if a + b > depth:
            continue
        goal = (-a, -b)
        expected = naive_partition(context.vectors, goal, a + b + 1)
        assert kostant_partition(context, goal) == Multiplicity.finite(expected), goal


def test_bound_caps_the_number_of_summands() -> None:
    context = PartitionContext.build([(1, 0), (0, 1), (1, 1)])

    assert kostant_partition(context, (2, 2), bound=2).count == 1


def test_empty_vector_set() -> None:
    context = PartitionContext.build([])

    assert not context.zero_in_cone
    assert kostant_partition(context, (0, 0)).count == 1
    assert kostant_partition(context, (1, 0)).count == 0


def test_zero_in_cone_gives_infinite_multiplicity() -> None:
    context = PartitionContext.build([(1, 0), (-1, 0)])

    assert context.zero_in_cone
    assert kostant_partition(context, (2, 0)) == INFINITE
    assert kostant_partition(context, (0, 1)) == Multiplicity.finite(0)


def test_zero_vector_is_refused() -> None:
    with pytest.raises(UsageError):
        PartitionContext.build([(0, 0), (1, 0)])


def test_multiplicity_arithmetic_and_display() -> None:
    assert Multiplicity.finite(3) + Multiplicity.finite(4) == Multiplicity.finite(7)
    assert (INFINITE + Multiplicity.finite(1)).infinite
    assert not Multiplicity.finite(0)
    assert str(INFINITE) == "∞"
    assert INFINITE.to_json() == "inf"
    assert Multiplicity.finite(2).to_json() == 2
