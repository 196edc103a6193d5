"""Tests for the regression runner."""

from __future__ import annotations

import pytest

from vermabranch import goldens
from vermabranch.errors import UsageError
from vermabranch.regress import (
    SUITE_NAMES,
    CaseResult,
    RegressionReport,
    element_from_terms,
    run_suite,
)


def test_suite_names() -> None:
    assert SUITE_NAMES == ("structure", "fd-tables", "branching", "singular", "certificates")


def test_empty_suite_name_is_refused() -> None:
    with pytest.raises(UsageError, match="empty"):
        run_suite("")


def test_unknown_suite_is_refused() -> None:
    with pytest.raises(UsageError, match="unknown suite"):
        run_suite("everything")


def test_structure_suite_passes() -> None:
    report = run_suite("structure")

    assert report.passed, [case.detail for case in report.failures]
    assert [case.name for case in report.cases] == [
        "subalgebra",
        "projection",
        "dynkin-index",
        "casimir",
        "casimir-image",
    ]


def test_fd_tables_suite_passes() -> None:
    report = run_suite("fd-tables")

    assert report.passed, [case.detail for case in report.failures]
    assert report.cases


def test_branching_suite_passes() -> None:
    report = run_suite("branching")

    assert report.passed, [(case.name, case.detail) for case in report.failures]
    names = [case.name for case in report.cases]
    assert sum(name.startswith("character ") for name in names) == 15
    assert "partitions 1,1,1" in names
    assert "m = n x1*w1+w2+w3" in names


def test_singular_suite_passes() -> None:
    report = run_suite("singular")

    assert report.passed, [(case.name, case.detail) for case in report.failures]
    assert any(case.name == "two-dimensional pair" for case in report.cases)


def test_certificates_suite_passes() -> None:
    report = run_suite("certificates")

    assert report.passed, [(case.name, case.detail) for case in report.failures]
    assert [case.name for case in report.cases] == [
        f"certificates {text}" for text in goldens.CERTIFICATES
    ]


def test_report_collects_failures() -> None:
    report = RegressionReport(
        "all",
        (
            CaseResult("structure", "dynkin-index", True),
            CaseResult("branching", "(1,0,0)", False, "got 2"),
        ),
    )

    assert report.passed is False
    assert report.failures == (CaseResult("branching", "(1,0,0)", False, "got 2"),)
    assert report.to_json()["failed"] == 1
    assert report.to_json()["cases"][1] == {
        "suite": "branching",
        "case": "(1,0,0)",
        "passed": False,
        "detail": "got 2",
    }


def test_element_from_terms_parses_powers() -> None:
    element = element_from_terms([("-1/2", "g-3^2 g-2"), ("1", "g-1")])

    assert len(element.terms) == 2
    assert (("g", -3), ("g", -3), ("g", -2)) in element.terms
