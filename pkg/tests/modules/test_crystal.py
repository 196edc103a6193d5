"""Tests for LS path crystals."""

from __future__ import annotations

import pytest

from vermabranch.algebra.exact import QQ
from vermabranch.errors import ConstructionError
from vermabranch.modules.crystal import LSPath, PathCrystal

A1 = ((2,),)
A2 = ((2, -1), (-1, 2))
G2 = ((2, -1), (-3, 2))
B3 = ((2, -1, 0), (-1, 2, -2), (0, -1, 2))


def test_a1_crystal_is_a_string() -> None:
    crystal = PathCrystal(A1, (2,))

    endpoints = [path.endpoint for path in crystal.elements()]

    assert endpoints == [(QQ(2),), (QQ(0),), (QQ(-2),)]


@pytest.mark.parametrize(
    ("cartan", "highest", "size"),
    [(A2, (1, 0), 3), (A2, (1, 1), 8), (G2, (1, 0), 7), (G2, (0, 1), 14), (B3, (0, 1, 0), 21)],
)
def test_crystal_sizes_match_dimensions(
    cartan: tuple[tuple[int, ...], ...], highest: tuple[int, ...], size: int
) -> None:
    assert len(PathCrystal(cartan, highest).elements()) == size


def test_lowering_then_raising_returns_the_path() -> None:
    crystal = PathCrystal(G2, (1, 0))
    lowered = crystal.lower(crystal.highest, 0)

    assert lowered is not None
    assert crystal.raise_(lowered, 0) == crystal.highest


def test_highest_path_cannot_be_raised() -> None:
    crystal = PathCrystal(A2, (1, 1))

    assert crystal.raise_(crystal.highest, 0) is None
    assert crystal.epsilon(crystal.highest, 1) == 0
    assert crystal.phi(crystal.highest, 1) == 1


def test_longest_words() -> None:
    assert PathCrystal(A2, (0, 0)).longest_word() == (0, 1, 0)
    assert len(PathCrystal(G2, (0, 0)).longest_word()) == 6
    assert len(PathCrystal(B3, (0, 0, 0)).longest_word()) == 9


def test_string_parametrizations_are_distinct() -> None:
    crystal = PathCrystal(G2, (1, 0))
    word = crystal.longest_word()

    strings = {crystal.string(path, word) for path in crystal.elements()}

    assert len(strings) == 7
    assert crystal.string(crystal.highest, word) == (0,) * 6


def test_straight_path_endpoint() -> None:
    assert LSPath.straight((1, 2)).endpoint == (QQ(1), QQ(2))


def test_non_dominant_weight_is_refused() -> None:
    with pytest.raises(ConstructionError):
        PathCrystal(A2, (1, -1))
