"""Tests for generalized Verma modules and the U(g) action on them."""

from __future__ import annotations

import pytest

from vermabranch.algebra.exact import RING
from vermabranch.algebra.lie import ChevalleyAlgebra, LieElement
from vermabranch.algebra.roots import Weight, parse_weight
from vermabranch.algebra.uea import UEAElement
from vermabranch.branching.parabolic import ParabolicSubalgebra
from vermabranch.branching.verma import GeneralizedVerma, VermaVector
from vermabranch.errors import UsageError

x1 = RING.gens[0]


@pytest.fixture(scope="module")
def verma(so7: ChevalleyAlgebra) -> GeneralizedVerma:
    parabolic = ParabolicSubalgebra(so7, (1, 0, 0))
    return GeneralizedVerma(parabolic, parse_weight(so7.system, "10*w1+w2"))


@pytest.fixture(scope="module")
def symbolic(so7: ChevalleyAlgebra) -> GeneralizedVerma:
    parabolic = ParabolicSubalgebra(so7, (1, 0, 0))
    return GeneralizedVerma(parabolic, parse_weight(so7.system, "x1*w1+w2"))


def test_degree_dimensions(verma: GeneralizedVerma) -> None:
    assert verma.inducing.dimension == 5
    assert verma.dimension_of_degree(0) == 5
    assert verma.dimension_of_degree(1) == 25
    assert verma.dimension_of_degree(2) == 75
    assert verma.dimension_of_degree(-1) == 0


def test_lowering_by_nilradical_appends_to_monomial(verma: GeneralizedVerma) -> None:
    vector = verma.act(("g", -1), verma.highest_vector())

    assert vector == VermaVector({((1,), verma.top_index): RING.one})
    assert verma.format_vector(vector) == "g_{-1}·v_λ"


def test_words_act_from_the_right(verma: GeneralizedVerma) -> None:
    word = UEAElement.word(("g", -4), ("g", -1))

    vector = verma.act(word, verma.highest_vector())

    assert vector == VermaVector({((1, 4), verma.top_index): RING.one})


def test_raising_generators_kill_the_highest_vector(verma: GeneralizedVerma) -> None:
    top = verma.highest_vector()

    assert verma.act(("g", 1), top).is_zero()
    assert verma.act(("g", 2), top).is_zero()


def test_cartan_acts_by_the_highest_weight(verma: GeneralizedVerma) -> None:
    top = verma.highest_vector()

    assert verma.act(("h", 1), top) == top.scaled(10)


def test_commutator_returns_to_the_top(verma: GeneralizedVerma) -> None:
    top = verma.highest_vector()

    result = verma.act(UEAElement.word(("g", 1), ("g", -1)), top)

    assert result == top.scaled(10)


def test_parameters_survive_in_coefficients(symbolic: GeneralizedVerma) -> None:
    top = symbolic.highest_vector()

    result = symbolic.act(UEAElement.word(("g", 1), ("g", -1)), top)

    assert result == VermaVector({((), symbolic.top_index): x1})


def test_lie_elements_act_linearly(verma: GeneralizedVerma) -> None:
    element = LieElement.of([(("g", -1), 1), (("g", -4), 2)])

    vector = verma.act(element, verma.highest_vector())

    assert set(vector.terms) == {((1,), verma.top_index), ((4,), verma.top_index)}


def test_as_uea_reproduces_the_vector(verma: GeneralizedVerma) -> None:
    vector = verma.act(UEAElement.word(("g", -1), ("g", -4)), verma.highest_vector())

    element = verma.as_uea(vector)

    assert verma.act(element, verma.highest_vector()) == vector


def test_weight_of_key(verma: GeneralizedVerma, so7: ChevalleyAlgebra) -> None:
    weight = verma.weight_of(((1,), verma.top_index))

    assert weight == verma.highest_weight - Weight.from_simple(so7.system, [1, 0, 0])


def test_normalized_clears_content_but_keeps_polynomial_factors(verma: GeneralizedVerma) -> None:
    top = verma.top_index
    vector = VermaVector.of([(((1,), top), -2 * x1), (((4,), top), 4 * x1)])

    normalized = vector.normalized()

    assert normalized == VermaVector({((1,), top): x1, ((4,), top): -2 * x1})
    assert normalized.proportional_to(vector)


def test_unknown_generator_is_refused(verma: GeneralizedVerma) -> None:
    with pytest.raises(UsageError):
        verma.act(UEAElement.word(("g", -10)), verma.highest_vector())
