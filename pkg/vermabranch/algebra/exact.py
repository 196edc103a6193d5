"""Exact rational and rational-function arithmetic in the parameters x1, x2, x3."""

from __future__ import annotations

import math
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field as dataclass_field
from fractions import Fraction
from typing import Literal

from sympy import QQ, Symbol, sympify
from sympy.polys.fields import FracElement, field
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.exceptions import DMNonInvertibleMatrixError
from sympy.polys.orderings import grlex
from sympy.polys.rings import PolyElement

from ..errors import ConstructionError, UsageError

VARIABLES = ("x1", "x2", "x3")

FIELD, X1, X2, X3 = field(",".join(VARIABLES), QQ, grlex)
RING = FIELD.ring
_DOMAIN = FIELD.to_domain()

Scalar = FracElement
Poly = PolyElement
Rational = type(QQ(1))
Style = Literal["text", "latex"]


class PoleError(UsageError):
    """Raised when a rational function is evaluated on a zero of its denominator."""


class SingularMatrixError(ConstructionError):
    """Raised when a linear system expected to be invertible is not."""


def qq(numerator: int, denominator: int = 1) -> Rational:
    """Build an exact rational."""

    return QQ(numerator, denominator)


def lift(value: object) -> Scalar:
    """Coerce ints, rationals, polynomials and strings into the parameter field."""

    if isinstance(value, FracElement):
        if value.field != FIELD:
            raise UsageError("rational function belongs to a different variable list")
        return value
    if isinstance(value, PolyElement):
        if value.ring != RING:
            raise UsageError("polynomial belongs to a different variable list")
        return FIELD(value)
    if isinstance(value, bool):
        raise UsageError("booleans are not scalars")
    if isinstance(value, int):
        return FIELD(value)
    if isinstance(value, Fraction):
        return FIELD(QQ(value.numerator, value.denominator))
    if isinstance(value, Rational):
        return FIELD(value)
    if isinstance(value, str):
        return parse_scalar(value)
    raise UsageError(f"cannot interpret {value!r} as an exact scalar")


def parse_scalar(text: str) -> Scalar:
    """Parse text such as ``"1/12*x1**2 + 2/3*x1 + 1"`` into the parameter field."""

    symbols = {name: Symbol(name) for name in VARIABLES}
    try:
        expr = sympify(text, locals=symbols)
    except Exception as exc:  # sympify raises a zoo of exception types
        raise UsageError(f"cannot parse scalar {text!r}: {exc}") from exc
    unknown = {str(sym) for sym in expr.free_symbols} - set(VARIABLES)
    if unknown:
        raise UsageError(f"unknown symbols in {text!r}: {', '.join(sorted(unknown))}")
    try:
        return FIELD.from_expr(expr)
    except ValueError as exc:
        raise UsageError(f"{text!r} is not a rational function of {VARIABLES}") from exc


def is_zero(value: Scalar | Poly) -> bool:
    return not value


def is_numeric(value: Scalar | Poly) -> bool:
    """True when the value does not depend on any parameter."""

    if isinstance(value, PolyElement):
        return value.is_ground
    return value.numer.is_ground and value.denom.is_ground


def to_rational(value: Scalar | Poly) -> Rational:
    """Return the rational constant of a parameter-free value."""

    if not is_numeric(value):
        raise UsageError(f"{format_scalar(lift(value))} is not a constant")
    if isinstance(value, PolyElement):
        return value.LC if value else QQ(0)
    numer = value.numer.LC if value.numer else QQ(0)
    return numer / value.denom.LC


def to_int(value: Rational) -> int:
    """Integer value of an integral rational."""

    if value.denominator != 1:
        raise UsageError(f"{value} is not an integer")
    return int(value.numerator)


def to_fraction(value: Scalar | Poly | Rational) -> Fraction:
    if not isinstance(value, Rational):
        value = to_rational(value)
    return Fraction(int(value.numerator), int(value.denominator))


def as_poly(value: Scalar | Poly | Rational | int) -> Poly:
    """Return a polynomial, raising if a genuine denominator is present."""

    if isinstance(value, PolyElement):
        return value
    if isinstance(value, int | Rational):
        return RING(value)
    if not value.denom.is_ground:
        raise UsageError(f"{format_scalar(value)} is not a polynomial")
    return value.numer.quo_ground(value.denom.LC)


def variables_of(value: Scalar | Poly) -> tuple[str, ...]:
    """Names of the parameters that occur in the value."""

    polys = [value] if isinstance(value, PolyElement) else [value.numer, value.denom]
    used = set()
    for poly in polys:
        for monom in poly.monoms():
            used.update(index for index, exp in enumerate(monom) if exp)
    return tuple(VARIABLES[index] for index in sorted(used))


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic greatest common divisor; gcd(p, 0) is p made monic."""

    if a.ring != b.ring:
        raise UsageError("gcd of polynomials over different variable lists")
    if not a and not b:
        return a.ring.zero
    g = a.gcd(b)
    return g.quo_ground(g.LC)


def primitive(poly: Poly) -> Poly:
    """Integral, content one, positive leading coefficient in graded-lex order."""

    if not poly:
        return poly
    _, cleared = poly.clear_denoms()
    content = math.gcd(*(int(c) for c in cleared.coeffs()))
    result = cleared.quo_ground(QQ(content))
    return -result if result.LC < 0 else result


def normalize_vector(entries: Sequence[Scalar]) -> list[Poly]:
    """Scale a vector to integral polynomial entries of content one and a positive lead.

    Only denominators and the integer content are removed; a polynomial factor
    shared by every entry is kept.
    The first nonzero entry gets a positive graded-lex leading coefficient.
    """

    nonzero = [value for value in entries if value]
    if not nonzero:
        return [RING.zero for _ in entries]
    denominator = RING.one
    for value in nonzero:
        denominator = denominator.lcm(value.denom)
    numerators = [as_poly(lift(value) * FIELD(denominator)) for value in entries]
    _, cleared = _clear_common_denominator(numerators)
    content = math.gcd(*(int(c) for value in cleared for c in value.coeffs()))
    cleared = [value.quo_ground(QQ(content)) for value in cleared]
    lead = next(value for value in cleared if value)
    if lead.LC < 0:
        cleared = [-value for value in cleared]
    return cleared


def evaluate(value: Scalar | Poly, assignment: Mapping[str, object]) -> Scalar:
    """Substitute rationals for parameters; unset parameters stay symbolic.

    Raises ``PoleError`` naming the vanishing denominator factor.
    """

    point: dict[int, Fraction] = {}
    for name, raw in assignment.items():
        if name not in VARIABLES:
            raise UsageError(f"unknown parameter {name!r}")
        point[VARIABLES.index(name)] = to_fraction(lift(raw))
    value = lift(value)
    numer = _substitute(value.numer, point)
    denom = _substitute(value.denom, point)
    if not denom:
        for factor, _ in value.denom.factor_list()[1]:
            if not _substitute(factor, point):
                raise PoleError(
                    f"denominator factor {format_poly(factor)} vanishes at "
                    + ", ".join(f"{VARIABLES[i]}={point[i]}" for i in sorted(point))
                )
        raise PoleError(f"denominator {format_poly(value.denom)} vanishes")
    return FIELD(numer) / FIELD(denom)


def format_poly(poly: Poly, style: Style = "text") -> str:
    """Render like ``1/12x1^2+2/3x1+1`` (text) or ``\\frac{1}{12}x_{1}^{2}+...`` (latex)."""

    if not poly:
        return "0"
    pieces = []
    for monom, coeff in poly.terms():
        piece = _format_term(coeff, monom, style)
        if pieces and not piece.startswith("-"):
            piece = "+" + piece
        pieces.append(piece)
    return "".join(pieces)


def format_scalar(value: Scalar | Poly | Rational | int, style: Style = "text") -> str:
    value = lift(value)
    if value.denom.is_ground:
        return format_poly(as_poly(value), style)
    numer = format_poly(value.numer, style)
    denom = format_poly(value.denom, style)
    if style == "latex":
        return f"\\frac{{{numer}}}{{{denom}}}"
    return f"({numer})/({denom})"


def format_coefficient(value: Scalar | Poly, style: Style = "text") -> str:
    """Prefix for a coefficient in front of a word: '' for 1, '-' for -1, parens if needed."""

    value = lift(value)
    if value == 1:
        return ""
    if value == -1:
        return "-"
    text = format_scalar(value, style)
    if is_numeric(value) or (value.denom.is_ground and len(value.numer.terms()) == 1):
        return text
    return f"({text})"


def scalar_to_json(value: Scalar | Poly) -> dict[str, list[dict[str, object]]]:
    """Term lists of numerator and denominator, coefficients as 'n/d' strings."""

    value = lift(value)
    return {"numer": poly_to_json(value.numer), "denom": poly_to_json(value.denom)}


def poly_to_json(poly: Poly) -> list[dict[str, object]]:
    return [{"coeff": str(coeff), "exps": list(monom)} for monom, coeff in poly.terms()]


@dataclass(frozen=True, slots=True)
class ExactMatrix:
    """Sparse matrix over the parameter field, keyed by (row, column)."""

    rows: int
    cols: int
    entries: Mapping[tuple[int, int], Scalar] = dataclass_field(default_factory=dict)

    @classmethod
    def build(
        cls, rows: int, cols: int, entries: Iterable[tuple[tuple[int, int], object]]
    ) -> ExactMatrix:
        data: dict[tuple[int, int], Scalar] = {}
        for key, value in entries:
            total = data.get(key, FIELD.zero) + lift(value)
            if total:
                data[key] = total
            else:
                data.pop(key, None)
        return cls(rows, cols, data)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[object]]) -> ExactMatrix:
        width = len(rows[0]) if rows else 0
        return cls.build(
            len(rows),
            width,
            (((i, j), value) for i, row in enumerate(rows) for j, value in enumerate(row)),
        )

    @classmethod
    def zero(cls, rows: int, cols: int) -> ExactMatrix:
        return cls(rows, cols, {})

    @classmethod
    def identity(cls, size: int) -> ExactMatrix:
        return cls(size, size, {(i, i): FIELD.one for i in range(size)})

    def get(self, row: int, col: int) -> Scalar:
        return self.entries.get((row, col), FIELD.zero)

    def column(self, col: int) -> dict[int, Scalar]:
        return {i: value for (i, j), value in self.entries.items() if j == col}

    def is_zero(self) -> bool:
        return not self.entries

    def to_rows(self) -> list[list[Scalar]]:
        grid = [[FIELD.zero] * self.cols for _ in range(self.rows)]
        for (i, j), value in self.entries.items():
            grid[i][j] = value
        return grid

    def transpose(self) -> ExactMatrix:
        return ExactMatrix(self.cols, self.rows, {(j, i): v for (i, j), v in self.entries.items()})

    def scale(self, factor: object) -> ExactMatrix:
        factor = lift(factor)
        if not factor:
            return ExactMatrix.zero(self.rows, self.cols)
        return ExactMatrix(self.rows, self.cols, {k: v * factor for k, v in self.entries.items()})

    def __add__(self, other: ExactMatrix) -> ExactMatrix:
        self._check_shape(other)
        return ExactMatrix.build(
            self.rows, self.cols, [*self.entries.items(), *other.entries.items()]
        )

    def __sub__(self, other: ExactMatrix) -> ExactMatrix:
        return self + other.scale(-1)

    def __matmul__(self, other: ExactMatrix) -> ExactMatrix:
        if self.cols != other.rows:
            raise UsageError(f"shape mismatch {self.shape} @ {other.shape}")
        by_row: dict[int, list[tuple[int, Scalar]]] = {}
        for (k, j), value in other.entries.items():
            by_row.setdefault(k, []).append((j, value))
        products = (
            ((i, j), left * right)
            for (i, k), left in self.entries.items()
            for j, right in by_row.get(k, ())
        )
        return ExactMatrix.build(self.rows, other.cols, products)

    def commutator(self, other: ExactMatrix) -> ExactMatrix:
        return self @ other - other @ self

    def apply(self, vector: Mapping[int, Scalar]) -> dict[int, Scalar]:
        """Multiply a sparse column vector."""

        result: dict[int, Scalar] = {}
        for (i, j), value in self.entries.items():
            coeff = vector.get(j)
            if coeff:
                result[i] = result.get(i, FIELD.zero) + value * coeff
        return {i: v for i, v in result.items() if v}

    def rank(self) -> int:
        if not self.rows or not self.cols:
            return 0
        _, pivots = self._domain().rref()
        return len(pivots)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def _domain(self) -> DomainMatrix:
        return DomainMatrix(self.to_rows(), self.shape, _DOMAIN)

    def _check_shape(self, other: ExactMatrix) -> None:
        if self.shape != other.shape:
            raise UsageError(f"shape mismatch {self.shape} vs {other.shape}")


def vstack(blocks: Sequence[ExactMatrix]) -> ExactMatrix:
    if not blocks:
        raise UsageError("nothing to stack")
    cols = blocks[0].cols
    entries = []
    offset = 0
    for block in blocks:
        if block.cols != cols:
            raise UsageError("column counts differ")
        entries.extend(((i + offset, j), v) for (i, j), v in block.entries.items())
        offset += block.rows
    return ExactMatrix.build(offset, cols, entries)


def nullspace(matrix: ExactMatrix) -> list[list[Poly]]:
    """Kernel basis, one vector per free column, each with primitive polynomial entries."""

    if matrix.cols == 0:
        return []
    if matrix.rows == 0 or matrix.is_zero():
        return [
            [RING.one if i == j else RING.zero for i in range(matrix.cols)]
            for j in range(matrix.cols)
        ]
    reduced, pivots = matrix._domain().rref()
    grid = reduced.to_list()
    basis = []
    for free in range(matrix.cols):
        if free in pivots:
            continue
        vector = [FIELD.zero] * matrix.cols
        vector[free] = FIELD.one
        for row, pivot in enumerate(pivots):
            vector[pivot] = -grid[row][free] / grid[row][pivot]
        basis.append(normalize_vector(vector))
    return basis


def solve(matrix: ExactMatrix, rhs: Sequence[Scalar]) -> list[Scalar]:
    """Solve a square nonsingular system."""

    if matrix.rows != matrix.cols or len(rhs) != matrix.rows:
        raise UsageError("solve expects a square system")
    if matrix.rows == 0:
        return []
    column = DomainMatrix([[lift(v)] for v in rhs], (matrix.rows, 1), _DOMAIN)
    try:
        solution = matrix._domain().lu_solve(column)
    except DMNonInvertibleMatrixError as exc:
        raise SingularMatrixError("linear system is singular") from exc
    return [row[0] for row in solution.to_list()]


def inverse_rational(rows: Sequence[Sequence[Rational | int]]) -> tuple[tuple[Rational, ...], ...]:
    """Inverse of a small rational matrix."""

    size = len(rows)
    matrix = DomainMatrix([[QQ(v) for v in row] for row in rows], (size, size), QQ)
    try:
        inverse = matrix.inv()
    except DMNonInvertibleMatrixError as exc:
        raise SingularMatrixError("matrix is not invertible") from exc
    return tuple(tuple(row) for row in inverse.to_list())


def _substitute(poly: Poly, point: Mapping[int, Fraction]) -> Poly:
    result = RING.zero
    for monom, coeff in poly.terms():
        factor = Fraction(int(coeff.numerator), int(coeff.denominator))
        rest = [0] * len(VARIABLES)
        for index, exp in enumerate(monom):
            if index in point:
                factor *= point[index] ** exp
            else:
                rest[index] = exp
        if factor:
            result += RING({tuple(rest): QQ(factor.numerator, factor.denominator)})
    return result


def _clear_common_denominator(polys: Sequence[Poly]) -> tuple[int, list[Poly]]:
    denominator = 1
    for poly in polys:
        for coeff in poly.coeffs():
            denominator = math.lcm(denominator, int(coeff.denominator))
    return denominator, [poly.mul_ground(QQ(denominator)) for poly in polys]


def _format_rational(value: Rational, style: Style) -> str:
    if value.denominator == 1:
        return str(int(value.numerator))
    if style == "latex":
        sign = "-" if value < 0 else ""
        return f"{sign}\\frac{{{abs(int(value.numerator))}}}{{{int(value.denominator)}}}"
    return f"{int(value.numerator)}/{int(value.denominator)}"


def _format_term(coeff: Rational, monom: tuple[int, ...], style: Style) -> str:
    letters = []
    for index, exp in enumerate(monom):
        if not exp:
            continue
        if style == "latex":
            letters.append(f"x_{{{index + 1}}}" + (f"^{{{exp}}}" if exp > 1 else ""))
        else:
            letters.append(f"x{index + 1}" + (f"^{exp}" if exp > 1 else ""))
    body = "".join(letters)
    if not body:
        return _format_rational(coeff, style)
    if coeff == 1:
        return body
    if coeff == -1:
        return "-" + body
    return _format_rational(coeff, style) + body
