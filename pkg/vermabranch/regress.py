"""Regression suites comparing computed data against the bundled reference tables."""

from __future__ import annotations

from collections import Counter
from collections.abc import Callable, Iterator, Sequence
from dataclasses import dataclass
from functools import cache

import structlog

from . import goldens
from .algebra.casimir import casimir_quadratic
from .algebra.embedding import g2_in_so7
from .algebra.exact import (
    ExactMatrix,
    Poly,
    Rational,
    Scalar,
    evaluate,
    format_poly,
    format_scalar,
    parse_scalar,
    primitive,
    to_rational,
)
from .algebra.lie import Generator, generate_subalgebra, parse_generator
from .algebra.roots import Weight, parse_weight
from .algebra.uea import UEAElement, normal_order
from .branching.cones import quotient_weights
from .branching.multiplicity import (
    branch_up_to_degree,
    branching_multiplicity,
    character_identity,
    quasipoly_degree_bound,
)
from .branching.parabolic import ParabolicSubalgebra, induced_bar_parabolic, parse_crossings
from .branching.partition import Multiplicity, PartitionContext, kostant_partition, naive_partition
from .branching.verma import GeneralizedVerma, VermaVector
from .errors import UsageError, VermaBranchError
from .modules.characters import decompose_over_bar_levi
from .modules.finite import FiniteModule, build_fd_module, levi_dimension
from .singular.conditions import p1_scalar
from .singular.projector import SingularVectorResult, top_level_singular_vectors, verify_singular
from .singular.shapovalov import ShapovalovCertificate, shapovalov_certificate

LOG = structlog.get_logger(__name__)

Check = Callable[[], str | None]


@dataclass(frozen=True, slots=True)
class CaseResult:
    suite: str
    name: str
    passed: bool
    detail: str = ""

    def to_json(self) -> dict[str, object]:
        return {"suite": self.suite, "case": self.name, "passed": self.passed, "detail": self.detail}


@dataclass(frozen=True, slots=True)
class RegressionReport:
    suite: str
    cases: tuple[CaseResult, ...]

    @property
    def passed(self) -> bool:
        return all(case.passed for case in self.cases)

    @property
    def failures(self) -> tuple[CaseResult, ...]:
        return tuple(case for case in self.cases if not case.passed)

    def to_json(self) -> dict[str, object]:
        return {
            "suite": self.suite,
            "passed": self.passed,
            "total": len(self.cases),
            "failed": len(self.failures),
            "cases": [case.to_json() for case in self.cases],
        }


def run_suite(name: str) -> RegressionReport:
    """Run one suite, or every suite for ``all``; failing cases are reported, not raised."""

    if not name:
        raise UsageError("suite name is empty")
    if name == "all":
        names = tuple(_SUITES)
    elif name in _SUITES:
        names = (name,)
    else:
        raise UsageError(f"unknown suite {name!r}; choose from {', '.join((*_SUITES, 'all'))}")
    cases = []
    for suite in names:
        LOG.info("running suite", suite=suite)
        for case_name, check in _SUITES[suite]():
            try:
                detail = check()
            except VermaBranchError as exc:
                detail = f"{type(exc).__name__}: {exc}"
            cases.append(CaseResult(suite, case_name, detail is None, detail or ""))
            if detail is not None:
                LOG.warning("regression mismatch", suite=suite, case=case_name, detail=detail)
    return RegressionReport(name, tuple(cases))


def element_from_terms(terms: Sequence[tuple[str, str]]) -> UEAElement:
    """Build an element from ``(coefficient, "g-3^2 g-2")`` pairs."""

    return UEAElement.of((_word(word), parse_scalar(coeff)) for coeff, word in terms)


def in_span(vectors: Sequence[VermaVector], candidate: VermaVector) -> bool:
    keys = sorted({key for v in (*vectors, candidate) for key in v.terms})
    base = [[v.terms.get(key, 0) for key in keys] for v in vectors]
    if not base:
        return candidate.is_zero()
    extended = [*base, [candidate.terms.get(key, 0) for key in keys]]
    return ExactMatrix.from_rows(base).rank() == ExactMatrix.from_rows(extended).rank()


def _structure_cases() -> Iterator[tuple[str, Check]]:
    embedding = g2_in_so7()
    source, target = embedding.source, embedding.target

    def subalgebra() -> str | None:
        seeds = [
            embedding.image(source.simple_generator(i, sign))
            for i in range(source.rank)
            for sign in (1, -1)
        ]
        report = generate_subalgebra(target, seeds)
        if report.dimension != goldens.DIMENSION or report.cartan_type != "G2":
            return f"got dimension {report.dimension}, type {report.cartan_type}"
        if source.system.cartan != goldens.CARTAN_MATRIX:
            return f"Cartan matrix {source.system.cartan}"
        return None

    def projection() -> str | None:
        for so7, g2 in goldens.PROJECTED_FUNDAMENTALS.items():
            got = embedding.pr(parse_weight(target.system, so7))
            if got != parse_weight(source.system, g2):
                return f"pr({so7}) = {got.format()}, expected {g2}"
        return None

    def dynkin() -> str | None:
        if embedding.dynkin_index != goldens.DYNKIN_INDEX:
            return f"Dynkin index {embedding.dynkin_index}"
        return None

    def casimir() -> str | None:
        expected = normal_order(
            source, _swap_labels(element_from_terms(goldens.CASIMIR_G2_LONG_FIRST))
        )
        got = normal_order(source, casimir_quadratic(source).scaled(goldens.CASIMIR_G2_SCALE))
        return _difference(got, expected, source.symbol)

    def casimir_image() -> str | None:
        expected = normal_order(target, element_from_terms(goldens.CASIMIR_IMAGE))
        image = embedding.embed_uea(casimir_quadratic(source))
        got = normal_order(target, image).scaled(goldens.CASIMIR_IMAGE_SCALE)
        return _difference(got, expected, target.symbol)

    yield "subalgebra", subalgebra
    yield "projection", projection
    yield "dynkin-index", dynkin
    yield "casimir", casimir
    yield "casimir-image", casimir_image


def _fd_cases() -> Iterator[tuple[str, Check]]:
    embedding = g2_in_so7()
    full = ParabolicSubalgebra(embedding.target, (0, 0, 0))
    bar = induced_bar_parabolic(full, embedding)

    def decomposition(text: str) -> Check:
        def check() -> str | None:
            dimension, expected = goldens.FD_DECOMPOSITIONS[text]
            module = build_fd_module(full.levi, parse_weight(embedding.target.system, text))
            constituents = decompose_over_bar_levi(module, embedding, bar.levi)
            got = sorted(
                (c.weight.format(), c.multiplicity, levi_dimension(bar.levi, c.weight))
                for c in constituents
            )
            wanted = sorted(
                (parse_weight(embedding.source.system, w).format(), m, d) for w, m, d in expected
            )
            if module.dimension != dimension or got != wanted:
                return f"dimension {module.dimension}, constituents {got}"
            return None

        return check

    def singular(text: str, mu: str, terms: Sequence[tuple[str, str]]) -> Check:
        def check() -> str | None:
            module = build_fd_module(full.levi, parse_weight(embedding.target.system, text))
            vector = _fd_apply(module, element_from_terms(terms))
            if not vector:
                return "vector is zero"
            expected = parse_weight(embedding.source.system, mu)
            if any(embedding.pr(module.weight(i)) != expected for i in vector):
                return f"vector is not of weight {mu}"
            for index in range(embedding.source.rank):
                raising = embedding.image(embedding.source.simple_generator(index))
                if module.act(raising).apply(vector):
                    return f"not killed by the image of the raising generator {index + 1}"
            return None

        return check

    for text in goldens.FD_DECOMPOSITIONS:
        yield f"decompose {text}", decomposition(text)
    for text, mu, terms in goldens.FD_SINGULAR_VECTORS:
        yield f"singular {text} -> {mu}", singular(text, mu, terms)


def _branching_cases() -> Iterator[tuple[str, Check]]:
    embedding = g2_in_so7()
    target, source = embedding.target, embedding.source

    def conditions(label: str) -> Check:
        def check() -> str | None:
            parabolic = ParabolicSubalgebra(target, parse_crossings(label))
            report = quotient_weights(parabolic, embedding)
            got = (report.weakly_compatible, report.compatible, report.finite_branching)
            if got != goldens.CONDITIONS[label] or not report.condition_a:
                return f"weakly/compatible/finite = {got}, condition A {report.condition_a}"
            return None

        return check

    def branch(label: str, text: str, cutoff: int, expected: dict[str, int]) -> Check:
        def check() -> str | None:
            parabolic = ParabolicSubalgebra(target, parse_crossings(label))
            rows = branch_up_to_degree(parabolic, embedding, parse_weight(target.system, text), cutoff)
            got = {row.weight.format(): str(row.multiplicity) for row in rows}
            wanted = {parse_weight(source.system, w).format(): str(m) for w, m in expected.items()}
            return None if got == wanted else f"rows {got}"

        return check

    def degree_bound() -> str | None:
        bound = quasipoly_degree_bound(target.system, source.system)
        return None if bound == goldens.QUASIPOLY_DEGREE_BOUND else f"bound {bound}"

    def identity(label: str, text: str, cutoff: int) -> Check:
        def check() -> str | None:
            parabolic = ParabolicSubalgebra(target, parse_crossings(label))
            result = character_identity(
                parabolic, embedding, parse_weight(target.system, text), cutoff
            )
            return None if result.holds else f"dimensions by depth {result.dimensions()}"

        return check

    def partition_sweep(label: str) -> Check:
        def check() -> str | None:
            parabolic = ParabolicSubalgebra(target, parse_crossings(label))
            report = quotient_weights(parabolic, embedding)
            context = PartitionContext.build(report.quotient_weights)
            wrong = []
            for depth in range(goldens.PARTITION_SWEEP_DEPTH + 1):
                for first in range(depth + 1):
                    goal = (-first, first - depth)
                    fast = kostant_partition(context, goal)
                    slow = naive_partition(context.vectors, goal, depth + 1)
                    if fast != Multiplicity.finite(slow):
                        wrong.append(f"{goal}: {fast} against {slow}")
            return f"partition counts differ at {wrong}" if wrong else None

        return check

    def constituents_branch(text: str) -> Check:
        def check() -> str | None:
            point = goldens.MULTIPLICITY_POINT
            parabolic = ParabolicSubalgebra(target, (1, 0, 0))
            highest = _specialize(parse_weight(target.system, text), point)
            expected: Counter[Weight] = Counter()
            for coords, _ in goldens.P1_TABLE[text]:
                weight = Weight.from_simple(source.system, [parse_scalar(c) for c in coords])
                expected[_specialize(weight, point)] += 1
            wrong = []
            for weight, count in expected.items():
                found = branching_multiplicity(parabolic, embedding, highest, weight)
                if found != Multiplicity.finite(count):
                    wrong.append(f"m({weight.format()}) = {found}, n = {count}")
            return "; ".join(wrong) or None

        return check

    def direct_sum() -> str | None:
        label, text, cutoff = goldens.DIRECT_SUM
        parabolic = ParabolicSubalgebra(target, parse_crossings(label))
        result = character_identity(parabolic, embedding, parse_weight(target.system, text), cutoff)
        lhs, rhs = result.dimensions()
        if lhs != rhs or len(result.branches) != 3:
            return f"{lhs} against {rhs} from {len(result.branches)} modules"
        return None

    for label in goldens.CONDITIONS:
        yield f"conditions {label}", conditions(label)
    for label, text, cutoff, expected in goldens.BRANCHING:
        yield f"branch {label} {text}", branch(label, text, cutoff, expected)
    yield "degree-bound", degree_bound
    for label, text, cutoff in goldens.CHARACTER_IDENTITIES:
        yield f"character {label} {text}", identity(label, text, cutoff)
    yield "direct-sum", direct_sum
    for label in goldens.PARTITION_SWEEP_PARABOLICS:
        yield f"partitions {label}", partition_sweep(label)
    for text in goldens.P1_TABLE:
        yield f"m = n {text}", constituents_branch(text)


def _singular_cases() -> Iterator[tuple[str, Check]]:
    embedding = g2_in_so7()
    source = embedding.source.system

    def p1_rows(text: str) -> Check:
        def check() -> str | None:
            verma = _verma("1,0,0", text)
            bar = induced_bar_parabolic(verma.parabolic, embedding)
            constituents = decompose_over_bar_levi(verma.inducing, embedding, bar.levi)
            got: Counter[tuple[Weight, str]] = Counter()
            for c in constituents:
                got[(c.weight, format_scalar(p1_scalar(embedding, c.weight)))] += c.multiplicity
            wanted: Counter[tuple[Weight, str]] = Counter()
            for coords, value in goldens.P1_TABLE[text]:
                weight = Weight.from_simple(source, [parse_scalar(c) for c in coords])
                wanted[(weight, format_scalar(parse_scalar(value)))] += 1
            if got != wanted:
                return f"constituents {sorted((w.format(), p) for w, p in got.elements())}"
            return None

        return check

    def printed(label: str, text: str, terms: Sequence[tuple[str, str]]) -> Check:
        def check() -> str | None:
            verma = _verma(label, text)
            vector = verma.act(element_from_terms(terms), verma.highest_vector())
            report = verify_singular(verma, vector, embedding)
            if not report.passed:
                return f"printed vector fails verification: {report.to_json()}"
            same = [r.vector for r in _results(label, text) if r.weight == report.weight]
            if not in_span(same, vector):
                return f"not in the span of the {len(same)} constructed vectors"
            return None

        return check

    def pair() -> str | None:
        verma = _verma("1,0,0", "x1*w1+w2+w3")
        vectors = [
            verma.act(element_from_terms(terms), verma.highest_vector())
            for terms in goldens.TWO_DIMENSIONAL_PAIR
        ]
        weight = verify_singular(verma, vectors[0], embedding).weight
        same = [r.vector for r in _results("1,0,0", "x1*w1+w2+w3") if r.weight == weight]
        if len(same) != 2 or not all(in_span(same, v) for v in vectors):
            return f"{len(same)} constructed vectors at {weight}"
        if in_span(vectors[:1], vectors[1]):
            return "printed pair is dependent"
        return None

    def factors(label: str, text: str, mu: str, values: Sequence[str]) -> Check:
        def check() -> str | None:
            weight = parse_weight(source, mu)
            found = [r for r in _results(label, text) if r.weight == weight]
            if len(found) != 1:
                return f"{len(found)} vectors of weight {mu}"
            got = sorted(str(value) for _, value in found[0].factors)
            wanted = sorted(str(parse_scalar(v)) for v in values)
            return None if got == wanted else f"projector factors {got}"

        return check

    def all_verified(label: str, text: str) -> Check:
        def check() -> str | None:
            bad = [r.weight.format() for r in _results(label, text) if not r.verification.passed]
            return f"unverified at {bad}" if bad else None

        return check

    for text in goldens.P1_TABLE:
        yield f"p1 {text}", p1_rows(text)
    for index, (label, text, terms) in enumerate(goldens.SINGULAR_VECTORS):
        yield f"vector {label} {text} #{index}", printed(label, text, terms)
    yield "two-dimensional pair", pair
    for label, text, mu, values in goldens.PROJECTOR_FACTORS:
        yield f"projector {label} {text} {mu}", factors(label, text, mu, values)
    for text in goldens.P1_TABLE:
        yield f"verified {text}", all_verified("1,0,0", text)


def family_certificates(text: str) -> list[ShapovalovCertificate]:
    """Certificates of the constructed vectors of one family over p(1,0,0).

    A weight with several singular vectors is certified through the printed pair
    instead, since its constructed basis is not canonical.
    """

    embedding = g2_in_so7()
    verma = _verma("1,0,0", text)
    results = _results("1,0,0", text)
    top = embedding.pr(verma.highest_weight)
    counts = Counter(r.weight for r in results)
    elements = [
        verma.as_uea(r.vector) for r in results if r.weight != top and counts[r.weight] == 1
    ]
    if any(count > 1 for count in counts.values()):
        elements.extend(element_from_terms(t) for t in goldens.TWO_DIMENSIONAL_PAIR)
    return [shapovalov_certificate(verma, element, embedding) for element in elements]


def certificate_key(poly: Poly, roots: Sequence[Rational]) -> tuple[str, tuple[str, ...]]:
    return format_poly(poly), tuple(sorted(str(r) for r in roots))


def expected_certificates(text: str) -> Counter[tuple[str, tuple[str, ...]]]:
    wanted: Counter[tuple[str, tuple[str, ...]]] = Counter()
    for poly, roots in goldens.CERTIFICATES[text]:
        values = [to_rational(parse_scalar(r)) for r in roots]
        wanted[certificate_key(primitive(parse_scalar(poly).numer), values)] += 1
    return wanted


def _certificate_cases() -> Iterator[tuple[str, Check]]:
    def certificates(text: str) -> Check:
        def check() -> str | None:
            got = Counter(certificate_key(c.poly, c.roots) for c in family_certificates(text))
            return None if got == expected_certificates(text) else f"certificates {sorted(got)}"

        return check

    for text in goldens.CERTIFICATES:
        yield f"certificates {text}", certificates(text)


@cache
def _verma(label: str, text: str) -> GeneralizedVerma:
    embedding = g2_in_so7()
    parabolic = ParabolicSubalgebra(embedding.target, parse_crossings(label))
    return GeneralizedVerma(parabolic, parse_weight(embedding.target.system, text))


@cache
def _results(label: str, text: str) -> tuple[SingularVectorResult, ...]:
    return tuple(top_level_singular_vectors(_verma(label, text), g2_in_so7()))


def _specialize(weight: Weight, point: dict[str, str]) -> Weight:
    assignment = {name: parse_scalar(value) for name, value in point.items()}
    return Weight(weight.system, [evaluate(c, assignment) for c in weight.simple], weight.basis)


def _word(text: str) -> tuple[Generator, ...]:
    letters: list[Generator] = []
    for token in text.split():
        name, _, power = token.partition("^")
        letters.extend([parse_generator(name)] * (int(power) if power else 1))
    return tuple(letters)


def _swap_labels(element: UEAElement) -> UEAElement:
    swap = {1: 2, 2: 1}

    def relabel(gen: Generator) -> Generator:
        kind, number = gen
        sign = -1 if number < 0 else 1
        return (kind, sign * swap.get(abs(number), abs(number)))

    return UEAElement.of(
        (tuple(relabel(letter) for letter in word), coeff) for word, coeff in element.terms.items()
    )


def _difference(got: UEAElement, expected: UEAElement, symbol: str) -> str | None:
    difference = got - expected
    if difference.is_zero():
        return None
    return f"differs by {difference.format(symbol)}"


def _fd_apply(module: FiniteModule, element: UEAElement) -> dict[int, Scalar]:
    """Apply ``element`` to the highest weight vector of ``module``."""

    total: dict[int, Scalar] = {}
    for word, coeff in element.terms.items():
        vector = {module.top_index: coeff}
        for letter in reversed(word):
            vector = module.action(letter).apply(vector)
        for index, value in vector.items():
            total[index] = total.get(index, 0) + value
    return {i: v for i, v in total.items() if v}


_SUITES: dict[str, Callable[[], Iterator[tuple[str, Check]]]] = {
    "structure": _structure_cases,
    "fd-tables": _fd_cases,
    "branching": _branching_cases,
    "singular": _singular_cases,
    "certificates": _certificate_cases,
}

SUITE_NAMES = tuple(_SUITES)
