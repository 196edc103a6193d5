"""Tests for enveloping-algebra words and PBW ordering."""

from __future__ import annotations

import pytest

from vermabranch.algebra.lie import ChevalleyAlgebra
from vermabranch.algebra.uea import UEAElement, check_letters, normal_order, pbw_key, transpose
from vermabranch.errors import UsageError


def test_pbw_key_puts_lowering_first() -> None:
    letters = [("g", 2), ("h", 1), ("g", -1), ("g", -3)]

    ordered = sorted(letters, key=pbw_key)

    assert ordered == [("g", -1), ("g", -3), ("h", 1), ("g", 2)]


def test_normal_order_adds_the_commutator(so7: ChevalleyAlgebra) -> None:
    element = UEAElement.word(("g", 1), ("g", -1))

    result = normal_order(so7, element)

    assert result == UEAElement.of([((("g", -1), ("g", 1)), 1), ((("h", 1),), 1)])


def test_normal_order_keeps_ordered_words(so7: ChevalleyAlgebra) -> None:
    element = UEAElement.word(("g", -2), ("h", 1), ("g", 3))

    assert normal_order(so7, element) == element


def test_normal_order_of_commuting_letters_only_swaps(so7: ChevalleyAlgebra) -> None:
    element = UEAElement.word(("g", -3), ("g", -1))

    assert normal_order(so7, element) == UEAElement.word(("g", -1), ("g", -3))


def test_transpose_reverses_and_flips_signs() -> None:
    element = UEAElement.word(("g", -3), ("g", -2))

    assert transpose(element) == UEAElement.word(("g", 2), ("g", 3))


def test_transpose_fixes_cartan_letters() -> None:
    element = UEAElement.word(("h", 1), ("g", -1), coefficient=3)

    assert element.transpose() == UEAElement.word(("g", 1), ("h", 1), coefficient=3)


def test_format_collapses_powers() -> None:
    element = UEAElement.of([((("g", -3), ("g", -3)), -4), ((("g", -1),), 1)])

    assert element.format() == "-4g_{-3}^2+g_{-1}"
    assert element.format(style="latex") == "-4g_{-3}^{2}+g_{-1}"


def test_format_constant_term() -> None:
    assert UEAElement.one().scaled(2).format() == "2"
    assert UEAElement().format() == "0"


def test_multiplication_concatenates_words() -> None:
    left = UEAElement.word(("g", -1))
    right = UEAElement.word(("g", -2), coefficient=2)

    product = left * right

    assert product == UEAElement.word(("g", -1), ("g", -2), coefficient=2)
    assert product.degree == 2


def test_weights_sum_letter_roots(so7: ChevalleyAlgebra) -> None:
    element = UEAElement.word(("g", -1), ("g", -2), ("h", 3))

    assert element.weights(so7) == {(-1, -1, 0)}


def test_check_letters_rejects_foreign_generators(so7: ChevalleyAlgebra) -> None:
    with pytest.raises(UsageError):
        check_letters(so7, UEAElement.word(("g", -10)))
