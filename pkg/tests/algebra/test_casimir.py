"""Tests for the Killing form and quadratic Casimir elements."""

from __future__ import annotations

from vermabranch.algebra.casimir import casimir_quadratic, harish_chandra_scalar, killing_form
from vermabranch.algebra.exact import QQ
from vermabranch.algebra.lie import ChevalleyAlgebra
from vermabranch.algebra.roots import parse_weight
from vermabranch.algebra.uea import UEAElement, normal_order


def test_killing_form_on_cartan(so7: ChevalleyAlgebra) -> None:
    assert killing_form(so7, ("h", 1), ("h", 1)) == QQ(20)
    assert killing_form(so7, ("h", 3), ("h", 3)) == QQ(10)
    assert killing_form(so7, ("h", 1), ("h", 3)) == QQ(0)


def test_killing_form_pairs_opposite_roots_only(so7: ChevalleyAlgebra) -> None:
    assert killing_form(so7, ("g", 1), ("g", -1)) != 0
    assert killing_form(so7, ("g", 1), ("g", -2)) == 0


def test_casimir_acts_by_one_on_the_adjoint(so7: ChevalleyAlgebra, g2: ChevalleyAlgebra) -> None:
    big = harish_chandra_scalar(so7, casimir_quadratic(so7), parse_weight(so7.system, "w2"))
    small = harish_chandra_scalar(g2, casimir_quadratic(g2), parse_weight(g2.system, "psi2"))

    assert big == 1
    assert small == 1


def test_casimir_vanishes_on_trivial_weight(g2: ChevalleyAlgebra) -> None:
    value = harish_chandra_scalar(g2, casimir_quadratic(g2), parse_weight(g2.system, "0"))

    assert value == 0


def test_casimir_is_normal_ordered(g2: ChevalleyAlgebra) -> None:
    casimir = casimir_quadratic(g2)

    assert normal_order(g2, casimir) == casimir
    assert casimir.degree == 2


def test_casimir_commutes_with_generators(g2: ChevalleyAlgebra) -> None:
    casimir = casimir_quadratic(g2)

    for gen in (("g", 1), ("g", -2), ("h", 1)):
        letter = UEAElement.word(gen)
        commutator = normal_order(g2, letter * casimir - casimir * letter)
        assert commutator.is_zero()
