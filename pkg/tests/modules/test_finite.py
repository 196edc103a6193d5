"""Tests for explicit finite-dimensional Levi modules."""

from __future__ import annotations

import pytest

from vermabranch.algebra.lie import ChevalleyAlgebra
from vermabranch.algebra.roots import parse_weight
from vermabranch.modules.finite import (
    Levi,
    LeviWeightError,
    VacuumPairing,
    attach_vacuum,
    build_fd_module,
    levi_dimension,
)


def test_spin_module_dimension(so7: ChevalleyAlgebra) -> None:
    module = build_fd_module(Levi(so7, range(3)), parse_weight(so7.system, "w3"))

    assert module.dimension == 8
    assert module.weight(module.top_index) == parse_weight(so7.system, "w3")


def test_action_matrices_respect_simple_brackets(so7: ChevalleyAlgebra) -> None:
    module = build_fd_module(Levi(so7, range(3)), parse_weight(so7.system, "w2"))

    first = module.action(("g", 1)).commutator(module.action(("g", -1)))
    third = module.action(("g", 3)).commutator(module.action(("g", -3)))

    assert first == module.action(("h", 1))
    assert third == module.action(("h", 3)).scale(2)


def test_derived_root_vector_has_the_right_weight(so7: ChevalleyAlgebra) -> None:
    module = build_fd_module(Levi(so7, range(3)), parse_weight(so7.system, "w1"))
    raising = module.action(("g", 4))

    assert not raising.is_zero()
    assert module.action(("h", 1)).commutator(raising) == raising


def test_levi_of_maximal_parabolic(so7: ChevalleyAlgebra) -> None:
    levi = Levi(so7, (1, 2))
    weight = parse_weight(so7.system, "10*w1+w2")

    module = build_fd_module(levi, weight)

    assert module.dimension == levi_dimension(levi, weight) == 5
    assert levi.positive_roots == (2, 3, 5, 7)


def test_nilradical_acts_by_zero(so7: ChevalleyAlgebra) -> None:
    module = build_fd_module(Levi(so7, (1, 2)), parse_weight(so7.system, "w2"))

    assert module.action(("g", 1)).is_zero()


def test_empty_levi_gives_a_character(so7: ChevalleyAlgebra) -> None:
    module = build_fd_module(Levi(so7, ()), parse_weight(so7.system, "x1*w1"))

    assert module.dimension == 1
    assert module.basis[0].format() == "v_λ"


def test_parameter_on_levi_root_is_refused(so7: ChevalleyAlgebra) -> None:
    with pytest.raises(LeviWeightError):
        build_fd_module(Levi(so7, (0,)), parse_weight(so7.system, "x1*w1"))


def test_vacuum_pairing(so7: ChevalleyAlgebra) -> None:
    pairing = VacuumPairing(so7, parse_weight(so7.system, "w1"))

    assert pairing((("g", 1), ("g", -1))) == 1
    assert pairing((("g", -1), ("g", 1))) == 0
    assert pairing(()) == 1


def test_attach_vacuum() -> None:
    assert attach_vacuum("g_{-1}") == "g_{-1}·v_λ"
    assert attach_vacuum("") == "v_λ"
    assert attach_vacuum("g_{-1}", style="latex") == "g_{-1}\\cdot v_{\\lambda}"


def test_format_vector(so7: ChevalleyAlgebra) -> None:
    module = build_fd_module(Levi(so7, range(3)), parse_weight(so7.system, "w1"))

    text = module.format_vector({module.top_index: 2})

    assert text == "2v_λ"
