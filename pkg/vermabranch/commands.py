"""The commands behind the CLI; each turns a JobSpec into a ResultDocument."""

from __future__ import annotations

import itertools
from collections import Counter
from collections.abc import Callable

import structlog

from .algebra.casimir import casimir_quadratic
from .algebra.exact import format_scalar
from .algebra.lie import generate_subalgebra
from .algebra.uea import normal_order
from .branching.cones import quotient_weights
from .branching.multiplicity import (
    branch_up_to_degree,
    character_identity,
    quasipoly_degree_bound,
)
from .branching.parabolic import ParabolicSubalgebra, induced_bar_parabolic
from .branching.verma import GeneralizedVerma
from .errors import UsageError
from .jobs import (
    JobSpec,
    ResultDocument,
    ResultPayload,
    ResultTable,
    resolve_embedding,
    resolve_parabolic,
    resolve_weight,
)
from .modules.characters import decompose_over_bar_levi
from .modules.finite import build_fd_module, levi_dimension
from .regress import run_suite
from .singular.conditions import p1_scalar, require_strong_condition_b, strong_condition_b
from .singular.projector import level, top_level_singular_vectors
from .singular.shapovalov import shapovalov_certificate

LOG = structlog.get_logger(__name__)


def cmd_structure(job: JobSpec) -> ResultDocument:
    """Generator images, projected fundamental weights, Casimirs and the Dynkin index."""

    embedding = resolve_embedding(job)
    source, target = embedding.source, embedding.target
    images = ResultTable(
        title=f"Images of the {source.system.name} generators",
        columns=["generator", "image"],
        latex_columns=["generator", "image"],
    )
    for gen in (*source.positive_generators, *source.negative_generators):
        image = embedding.image(gen)
        images.add_row(
            [source.format_generator(gen), image.format(target.symbol)],
            [_math(source.format_generator(gen, "latex")), _math(image.format(target.symbol, "latex"))],
        )
    projections = ResultTable(
        title="Projected fundamental weights",
        columns=["weight", "pr"],
        latex_columns=["weight", "pr"],
    )
    for index in range(target.rank):
        weight = target.system.fundamental_weight(index)
        projected = embedding.pr(weight)
        projections.add_row(
            [weight.format(), projected.format()],
            [_math(weight.format("latex")), _math(projected.format("latex"))],
        )
    seeds = [
        embedding.image(source.simple_generator(index, sign))
        for index in range(source.rank)
        for sign in (1, -1)
    ]
    subalgebra = generate_subalgebra(target, seeds)
    casimir = casimir_quadratic(source)
    image = normal_order(target, embedding.embed_uea(casimir))
    summary = {
        "pair": embedding.name,
        "subalgebra_dimension": subalgebra.dimension,
        "subalgebra_type": subalgebra.cartan_type,
        "dynkin_index": format_scalar(embedding.dynkin_index),
    }
    data = {
        "casimir": casimir.format(source.symbol),
        "casimir_image": image.format(target.symbol),
        "cartan_matrix": [list(row) for row in source.system.cartan],
    }
    return _document(job, summary, [images, projections], data)


def cmd_conditions(job: JobSpec) -> ResultDocument:
    """Cone conditions for one parabolic, or for every parabolic when none is given."""

    embedding = resolve_embedding(job)
    target = embedding.target
    if job.parabolic:
        parabolics = [resolve_parabolic(job, embedding)]
    else:
        parabolics = [
            ParabolicSubalgebra(target, crossings)
            for crossings in sorted(
                itertools.product((0, 1), repeat=target.rank), key=lambda c: (sum(c), c[::-1])
            )
        ]
    table = ResultTable(
        title=f"Conditions for {embedding.name}",
        columns=["parabolic", "bar parabolic", "A", "weakly compatible", "compatible", "finite"],
        latex_columns=[
            "$\\mathfrak{p}$",
            "$\\bar{\\mathfrak{p}}$",
            "A",
            "weakly compatible",
            "compatible",
            "finite",
        ],
    )
    reports = {}
    for parabolic in parabolics:
        report = quotient_weights(parabolic, embedding)
        bar = induced_bar_parabolic(parabolic, embedding)
        table.add_row(
            [
                parabolic.label,
                bar.label,
                *(
                    _flag(value)
                    for value in (
                        report.condition_a,
                        report.weakly_compatible,
                        report.compatible,
                        report.finite_branching,
                    )
                ),
            ]
        )
        reports[parabolic.label] = {"bar_parabolic": bar.label, **report.to_json()}
    summary = {
        "parabolics": len(parabolics),
        "compatible": [label for label, r in reports.items() if r["compatible"]],
        "finite_branching": [label for label, r in reports.items() if r["finite_branching"]],
    }
    return _document(job, summary, [table], {"reports": reports})


def cmd_decompose(job: JobSpec) -> ResultDocument:
    """The inducing Levi module decomposed over the smaller Levi, with Casimir scalars."""

    embedding = resolve_embedding(job)
    parabolic = resolve_parabolic(job, embedding)
    highest = resolve_weight(job, embedding)
    module = build_fd_module(parabolic.levi, highest)
    bar = induced_bar_parabolic(parabolic, embedding)
    verma = GeneralizedVerma(parabolic, highest, module)
    constituents = decompose_over_bar_levi(module, embedding, bar.levi)
    ordered = sorted(constituents, key=lambda c: (level(verma, embedding, c.weight), c.weight.format()))
    table = ResultTable(
        title=f"V_λ over the Levi of p̄{bar.label}",
        columns=["mu", "mult", "dim", "level", "p1"],
        latex_columns=["$\\mu$", "mult", "dim", "level", "$p_1(\\mu)$"],
    )
    for c in ordered:
        value = p1_scalar(embedding, c.weight)
        depth = str(level(verma, embedding, c.weight))
        dimension = str(levi_dimension(bar.levi, c.weight))
        table.add_row(
            [c.weight.format(), str(c.multiplicity), dimension, depth, format_scalar(value)],
            [
                _math(c.weight.format("latex")),
                str(c.multiplicity),
                dimension,
                depth,
                _math(format_scalar(value, "latex")),
            ],
        )
    report = strong_condition_b(embedding, [c.weight for c in ordered])
    summary = {
        "dimension": module.dimension,
        "constituents": len(ordered),
        "condition_b": report.holds,
        "weak_condition_b": report.weak_holds,
    }
    return _document(job, summary, [table], {"condition_b": report.to_json()})


def cmd_branch(job: JobSpec) -> ResultDocument:
    """Branching multiplicities m(mu, lambda) up to the requested degree."""

    embedding = resolve_embedding(job)
    parabolic = resolve_parabolic(job, embedding)
    highest = resolve_weight(job, embedding)
    if job.cutoff is None:
        raise UsageError("branch needs --cutoff")
    rows = branch_up_to_degree(parabolic, embedding, highest, job.cutoff)
    rows.sort(key=lambda row: (row.depth, row.weight.format()))
    table = ResultTable(
        title=f"Branching of M_λ(p{parabolic.label}) up to degree {job.cutoff}",
        columns=["mu", "depth", "m"],
        latex_columns=["$\\mu$", "depth", "$m(\\mu,\\lambda)$"],
    )
    for row in rows:
        mult = str(row.multiplicity)
        table.add_row(
            [row.weight.format(), str(row.depth), mult],
            [
                _math(row.weight.format("latex")),
                str(row.depth),
                "$\\infty$" if row.multiplicity.infinite else mult,
            ],
        )
    summary: dict[str, object] = {
        "rows": len(rows),
        "infinite": sum(row.multiplicity.infinite for row in rows),
        "degree_bound": quasipoly_degree_bound(embedding.target.system, embedding.source.system),
    }
    data: dict[str, object] = {"rows": [row.to_json() for row in rows]}
    if job.check_characters:
        check = character_identity(parabolic, embedding, highest, job.cutoff)
        lhs, rhs = check.dimensions()
        summary["character_identity"] = check.holds
        data["dimensions_by_depth"] = {"verma": lhs, "branches": rhs}
    return _document(job, summary, [table], data)


def cmd_singular(job: JobSpec) -> ResultDocument:
    """Top-level singular vectors with verification and Shapovalov certificates."""

    embedding = resolve_embedding(job)
    parabolic = resolve_parabolic(job, embedding)
    highest = resolve_weight(job, embedding)
    verma = GeneralizedVerma(parabolic, highest)
    bar = induced_bar_parabolic(parabolic, embedding)
    constituents = decompose_over_bar_levi(verma.inducing, embedding, bar.levi)
    condition_b = require_strong_condition_b(embedding, [c.weight for c in constituents])
    results = top_level_singular_vectors(verma, embedding)
    top = embedding.pr(highest)
    counts = Counter(result.weight for result in results)
    table = ResultTable(
        title=f"Singular vectors of M_λ(p{parabolic.label})",
        columns=["mu", "vector", "verified", "zeros"],
        latex_columns=["$\\mu$", "vector", "verified", "zeros"],
    )
    entries = []
    for result in results:
        entry = result.to_json(verma)
        roots = "-"
        if result.weight != top and counts[result.weight] == 1 and not result.vector.is_zero():
            certificate = shapovalov_certificate(verma, verma.as_uea(result.vector), embedding)
            entry["certificate"] = certificate.to_json()
            if certificate.variable is not None:
                roots = ", ".join(str(r) for r in certificate.roots) or "none"
        entries.append(entry)
        table.add_row(
            [result.weight.format(), verma.format_vector(result.vector), _flag(result.verification.passed), roots],
            [
                _math(result.weight.format("latex")),
                _math(verma.format_vector(result.vector, "latex")),
                _flag(result.verification.passed),
                roots,
            ],
        )
    summary = {
        "vectors": len(results),
        "verified": all(r.verification.passed for r in results),
        "anomalies": sum(r.anomaly is not None for r in results),
    }
    return _document(
        job, summary, [table], {"vectors": entries, "condition_b": condition_b.to_json()}
    )


def cmd_regress(job: JobSpec) -> ResultDocument:
    report = run_suite(job.suite or "")
    table = ResultTable(
        title=f"Regression suite {report.suite}",
        columns=["suite", "case", "result", "detail"],
        latex_columns=["suite", "case", "result", "detail"],
    )
    for case in report.cases:
        cells = [case.suite, case.name, "pass" if case.passed else "FAIL", case.detail]
        table.add_row(cells, [_escape(cell) for cell in cells])
    summary = {
        "passed": report.passed,
        "total": len(report.cases),
        "failed": len(report.failures),
    }
    return _document(job, summary, [table], report.to_json())


COMMANDS: dict[str, Callable[[JobSpec], ResultDocument]] = {
    "structure": cmd_structure,
    "conditions": cmd_conditions,
    "decompose": cmd_decompose,
    "branch": cmd_branch,
    "singular": cmd_singular,
    "regress": cmd_regress,
}


def run_job(job: JobSpec) -> ResultDocument:
    LOG.info("running job", command=job.command, pair=job.pair, parabolic=job.parabolic)
    return COMMANDS[job.command](job)


def _document(
    job: JobSpec, summary: dict[str, object], tables: list[ResultTable], data: dict[str, object]
) -> ResultDocument:
    return ResultDocument(job=job, results=ResultPayload(summary=summary, tables=tables, data=data))


def _flag(value: bool) -> str:
    return "yes" if value else "no"


def _math(text: str) -> str:
    return f"${text}$"


def _escape(text: str) -> str:
    for char in ("&", "%", "$", "#", "_", "{", "}"):
        text = text.replace(char, "\\" + char)
    return text

