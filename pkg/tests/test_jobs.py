"""Tests for job validation, weight resolution and embedding files."""

from __future__ import annotations

from pathlib import Path

import pytest
from pydantic import ValidationError

from vermabranch.algebra.exact import parse_scalar
from vermabranch.errors import ConstructionError, UsageError
from vermabranch.jobs import (
    JobSpec,
    ResultTable,
    load_embedding,
    parse_assignment,
    resolve_embedding,
    resolve_parabolic,
    resolve_weight,
)

G2_IN_SO7 = """
source = "G2"
target = "B3"

[images]
g1 = { g1 = 1, g3 = 1 }
"g-1" = { "g-1" = 1, "g-3" = 1 }
g2 = { g2 = 1 }
"g-2" = { "g-2" = 1 }
"""


def test_job_rejects_unknown_parameter_names() -> None:
    with pytest.raises(ValidationError, match="unknown parameters y"):
        JobSpec(command="decompose", substitutions={"y": "1"})


def test_job_rejects_negative_cutoff() -> None:
    with pytest.raises(ValidationError):
        JobSpec(command="branch", cutoff=-1)


def test_with_cutoff_returns_copy() -> None:
    job = JobSpec(command="branch")

    updated = job.with_cutoff(3)

    assert updated.cutoff == 3
    assert job.cutoff is None


def test_parse_assignment_strips_whitespace() -> None:
    assert parse_assignment(" x1 = -3/2 ") == ("x1", "-3/2")


@pytest.mark.parametrize("text", ["x1", "=2", "x1="])
def test_parse_assignment_rejects_malformed_text(text: str) -> None:
    with pytest.raises(UsageError):
        parse_assignment(text)


def test_resolve_weight_applies_substitutions() -> None:
    job = JobSpec(command="decompose", highest_weight="x1*w1+w2", substitutions={"x1": "10"})
    embedding = resolve_embedding(job)

    weight = resolve_weight(job, embedding)

    assert weight.fundamental == (parse_scalar("10"), parse_scalar("1"), parse_scalar("0"))


def test_resolve_weight_keeps_symbolic_weight_without_substitutions() -> None:
    job = JobSpec(command="decompose", highest_weight="x1*w1+w2")
    embedding = resolve_embedding(job)

    weight = resolve_weight(job, embedding)

    assert weight.fundamental[0] == parse_scalar("x1")


def test_resolve_weight_needs_lambda() -> None:
    job = JobSpec(command="singular", parabolic="1,0,0")

    with pytest.raises(UsageError, match="--lambda"):
        resolve_weight(job, resolve_embedding(job))


def test_resolve_parabolic_needs_crossings() -> None:
    job = JobSpec(command="branch")

    with pytest.raises(UsageError, match="--parabolic"):
        resolve_parabolic(job, resolve_embedding(job))


def test_resolve_parabolic_checks_length() -> None:
    job = JobSpec(command="branch", parabolic="1,0")

    with pytest.raises(UsageError, match="needs 3 entries"):
        resolve_parabolic(job, resolve_embedding(job))


def test_unknown_pair_is_a_usage_error() -> None:
    with pytest.raises(UsageError, match="unknown pair"):
        resolve_embedding(JobSpec(command="structure", pair="e8-so16"))


def test_embedding_file_reproduces_builtin_pair(tmp_path: Path) -> None:
    path = tmp_path / "g2.toml"
    path.write_text(G2_IN_SO7)

    embedding = load_embedding(path)

    assert embedding.dynkin_index == 3
    assert embedding.pr_root((0, 0, 1)) == (1, 0)


def test_embedding_file_with_broken_images_fails_verification(tmp_path: Path) -> None:
    path = tmp_path / "broken.toml"
    path.write_text(G2_IN_SO7.replace("g1 = { g1 = 1, g3 = 1 }", "g1 = { g1 = 1 }"))

    with pytest.raises(ConstructionError):
        load_embedding(path)


def test_missing_embedding_file(tmp_path: Path) -> None:
    with pytest.raises(UsageError, match="does not exist"):
        load_embedding(tmp_path / "absent.toml")


def test_embedding_file_needs_images(tmp_path: Path) -> None:
    path = tmp_path / "empty.toml"
    path.write_text('source = "G2"\ntarget = "B3"\n')

    with pytest.raises(UsageError, match="no \\[images\\] table"):
        load_embedding(path)


def test_result_table_checks_row_width() -> None:
    table = ResultTable(title="t", columns=["a", "b"], latex_columns=["a", "b"])

    table.add_row(["1", "2"])

    assert table.latex_rows == [["1", "2"]]
    with pytest.raises(UsageError):
        table.add_row(["1"])
