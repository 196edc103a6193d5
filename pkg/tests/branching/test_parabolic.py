"""Tests for parabolic subalgebras and their pullbacks."""

from __future__ import annotations

import pytest

from vermabranch.algebra.embedding import Embedding
from vermabranch.algebra.lie import ChevalleyAlgebra
from vermabranch.algebra.roots import Weight
from vermabranch.branching.parabolic import (
    ParabolicSubalgebra,
    induced_bar_parabolic,
    parse_crossings,
)
from vermabranch.errors import UsageError


def test_first_maximal_parabolic(so7: ChevalleyAlgebra) -> None:
    parabolic = ParabolicSubalgebra(so7, (1, 0, 0))

    assert parabolic.label == "(1,0,0)"
    assert parabolic.levi.simple == (1, 2)
    assert parabolic.nilradical_roots == (1, 4, 6, 8, 9)
    assert parabolic.opposite_nilradical[0] == ("g", -1)


def test_borel_has_every_root_in_the_nilradical(so7: ChevalleyAlgebra) -> None:
    parabolic = ParabolicSubalgebra(so7, (1, 1, 1))

    assert parabolic.levi.simple == ()
    assert len(parabolic.nilradical_roots) == 9


def test_contains(so7: ChevalleyAlgebra) -> None:
    parabolic = ParabolicSubalgebra(so7, (1, 0, 0))

    assert parabolic.contains(("g", -2))
    assert parabolic.contains(("g", 1))
    assert parabolic.contains(("h", 1))
    assert not parabolic.contains(("g", -1))
    assert not parabolic.contains(("g", -4))


def test_depth_counts_crossed_coordinates(so7: ChevalleyAlgebra) -> None:
    parabolic = ParabolicSubalgebra(so7, (1, 0, 1))

    assert parabolic.depth(Weight.from_simple(so7.system, [1, 2, 2])) == 3


@pytest.mark.parametrize(
    ("crossings", "expected"),
    [((0, 0, 0), (0, 0)), ((1, 0, 0), (1, 0)), ((0, 1, 0), (0, 1)), ((0, 0, 1), (1, 0))],
)
def test_induced_bar_parabolic(
    embedding: Embedding,
    so7: ChevalleyAlgebra,
    crossings: tuple[int, ...],
    expected: tuple[int, ...],
) -> None:
    bar = induced_bar_parabolic(ParabolicSubalgebra(so7, crossings), embedding)

    assert bar.crossings == expected
    assert bar.algebra is embedding.source


def test_induced_bar_parabolic_needs_the_target_algebra(
    embedding: Embedding, g2: ChevalleyAlgebra
) -> None:
    with pytest.raises(UsageError):
        induced_bar_parabolic(ParabolicSubalgebra(g2, (0, 0)), embedding)


def test_parse_crossings() -> None:
    assert parse_crossings("1,0,0") == (1, 0, 0)
    assert parse_crossings("(0,1,1)") == (0, 1, 1)
    assert parse_crossings([1, 1]) == (1, 1)


def test_parse_crossings_rejects_words() -> None:
    with pytest.raises(UsageError):
        parse_crossings("one,0,0")


@pytest.mark.parametrize("crossings", [(1, 0), (2, 0, 0), (1, 0, 0, 0)])
def test_bad_crossings_are_refused(so7: ChevalleyAlgebra, crossings: tuple[int, ...]) -> None:
    with pytest.raises(UsageError):
        ParabolicSubalgebra(so7, crossings)
