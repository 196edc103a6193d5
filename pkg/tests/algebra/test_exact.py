"""Tests for exact rational-function arithmetic."""

from __future__ import annotations

import pytest

from vermabranch.algebra.exact import (
    FIELD,
    QQ,
    RING,
    ExactMatrix,
    PoleError,
    evaluate,
    format_poly,
    format_scalar,
    normalize_vector,
    nullspace,
    parse_scalar,
    poly_gcd,
    primitive,
    to_int,
    variables_of,
)
from vermabranch.errors import UsageError

x1, x2, x3 = RING.gens


def test_poly_gcd_finds_common_linear_factor() -> None:
    quadratic = x1**2 + 8 * x1 + 12

    result = poly_gcd(quadratic, x1 + 2)

    assert result == x1 + 2


def test_poly_gcd_with_zero_is_monic() -> None:
    result = poly_gcd(2 * x1 + 4, RING.zero)

    assert result == x1 + 2


def test_poly_gcd_of_coprime_variables_is_one() -> None:
    assert poly_gcd(x1, x2) == RING.one


def test_nullspace_of_identity_is_empty() -> None:
    assert nullspace(ExactMatrix.identity(3)) == []


def test_nullspace_of_zero_matrix_is_everything() -> None:
    basis = nullspace(ExactMatrix.zero(2, 3))

    assert len(basis) == 3


def test_nullspace_vector_is_primitive_polynomial() -> None:
    matrix = ExactMatrix.from_rows([[parse_scalar("x1"), parse_scalar("2")]])

    (vector,) = nullspace(matrix)

    assert vector == [RING(2), -x1] or vector == [-RING(2), x1]


def test_evaluate_at_root_is_zero() -> None:
    value = evaluate(parse_scalar("x1**2+8*x1+12"), {"x1": -2})

    assert value == 0


def test_evaluate_cancels_common_factor() -> None:
    value = evaluate(parse_scalar("x1/x1"), {"x1": 5})

    assert value == 1


def test_evaluate_casimir_polynomial_at_zero() -> None:
    value = evaluate(parse_scalar("1/12*x1**2+2/3*x1+1"), {"x1": 0})

    assert value == 1


def test_evaluate_leaves_unset_parameters_symbolic() -> None:
    value = evaluate(parse_scalar("x1+x2"), {"x1": 1})

    assert value == parse_scalar("x2+1")


def test_evaluate_names_vanishing_denominator() -> None:
    with pytest.raises(PoleError, match="x1\\+2"):
        evaluate(parse_scalar("1/(x1+2)"), {"x1": -2})


def test_evaluate_rejects_unknown_parameter() -> None:
    with pytest.raises(UsageError):
        evaluate(parse_scalar("x1"), {"y": 1})


def test_parse_scalar_rejects_unknown_symbols() -> None:
    with pytest.raises(UsageError, match="unknown symbols"):
        parse_scalar("x1 + t")


def test_primitive_clears_denominators_and_sign() -> None:
    poly = parse_scalar("-1/2*x1**2 + 1/3").numer

    assert primitive(poly) == 3 * x1**2 - 2


def test_normalize_vector_clears_denominators() -> None:
    entries = [parse_scalar("x1/2"), parse_scalar("1")]

    assert normalize_vector(entries) == [x1, RING(2)]


def test_normalize_vector_keeps_a_shared_polynomial_factor() -> None:
    entries = [parse_scalar("-(x1 + 3)/2"), parse_scalar("x1**2 + 3*x1")]

    assert normalize_vector(entries) == [x1 + 3, -2 * x1**2 - 6 * x1]


def test_rank_detects_dependent_rows() -> None:
    matrix = ExactMatrix.from_rows([[1, 2], [2, 4]])

    assert matrix.rank() == 1


def test_rank_over_the_parameter_field() -> None:
    matrix = ExactMatrix.from_rows([[parse_scalar("x1"), 1], [1, parse_scalar("x1")]])

    assert matrix.rank() == 2


def test_to_int_rejects_fractions() -> None:
    with pytest.raises(UsageError):
        to_int(QQ(3, 2))


def test_format_poly_and_scalar() -> None:
    assert format_poly(x1**2 + 8 * x1 + 12) == "x1^2+8x1+12"
    assert format_scalar(FIELD(QQ(-5, 2))) == "-5/2"


def test_variables_of_lists_used_parameters() -> None:
    assert variables_of(parse_scalar("x3 + x1**2")) == ("x1", "x3")
