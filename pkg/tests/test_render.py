"""Tests for the result emitters."""

from __future__ import annotations

import json

import pytest

from vermabranch.jobs import JobSpec, ResultDocument, ResultPayload, ResultTable
from vermabranch.render import latex_table, render


@pytest.fixture
def document() -> ResultDocument:
    table = ResultTable(title="Branching", columns=["mu", "m"], latex_columns=["$\\mu$", "$m$"])
    table.add_row(["2x1ψ1", "1"], ["$2x_{1}\\psi_{1}$", "1"])
    table.add_row(["ψ2", "∞"], ["$\\psi_{2}$", "$\\infty$"])
    payload = ResultPayload(
        summary={"rows": 2, "finite": False, "compatible": []},
        tables=[table],
        data={"rows": [{"mu": "2x1ψ1", "m": "1"}]},
    )
    return ResultDocument(job=JobSpec(command="branch", parabolic="1,0,0"), results=payload)


def test_json_round_trips_through_the_model(document: ResultDocument) -> None:
    output = render(document, "json")

    data = json.loads(output)
    assert data["schema_version"] == 1
    assert data["job"]["command"] == "branch"
    assert data["results"]["tables"][0]["rows"][1] == ["ψ2", "∞"]
    assert ResultDocument.model_validate_json(output) == document


def test_latex_uses_latex_cells(document: ResultDocument) -> None:
    output = render(document, "latex")

    assert "\\begin{tabular}{ll}" in output
    assert "$\\mu$ & $m$ \\\\" in output
    assert "$\\psi_{2}$ & $\\infty$ \\\\" in output
    assert "ψ2" not in output


def test_latex_table_starts_with_title_comment() -> None:
    table = ResultTable(title="Conditions", columns=["p"], latex_columns=["p"])

    lines = latex_table(table).splitlines()

    assert lines[0] == "% Conditions"
    assert lines[-1] == "\\end{tabular}"


def test_text_lists_cells_and_summary(document: ResultDocument) -> None:
    output = render(document, "text", color=False)

    assert "Branching" in output
    assert "2x1ψ1" in output
    assert "Summary" in output
    assert "finite" in output and "no" in output


def test_text_shows_timing_when_recorded(document: ResultDocument) -> None:
    timed = document.model_copy(update={"timing_ms": 12.34})

    output = render(timed, "text", color=False)

    assert "timing_ms" in output
    assert "12.3" in output


def test_document_passes_unless_summary_says_otherwise(document: ResultDocument) -> None:
    failing = document.model_copy(
        update={"results": ResultPayload(summary={"passed": False})}
    )

    assert document.passed is True
    assert failing.passed is False
