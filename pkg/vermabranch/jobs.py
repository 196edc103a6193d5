"""Job descriptions, result documents and the embeddings they refer to."""

from __future__ import annotations

import tomllib
from collections.abc import Callable
from pathlib import Path
from typing import Any, Literal

from pydantic import BaseModel, Field, field_validator

from . import __version__
from .algebra.embedding import Embedding, build_embedding, g2_in_so7
from .algebra.exact import VARIABLES, evaluate, parse_scalar
from .algebra.lie import ChevalleyAlgebra, LieElement, chevalley_algebra, parse_generator
from .algebra.roots import Weight, parse_system, parse_weight
from .branching.parabolic import ParabolicSubalgebra, parse_crossings
from .config import OutputFormat
from .errors import UsageError

SCHEMA_VERSION = 1

Command = Literal["structure", "conditions", "decompose", "branch", "singular", "regress"]

PAIRS: dict[str, Callable[[], Embedding]] = {"g2-so7": g2_in_so7}


class JobSpec(BaseModel):
    """Everything a command needs; echoed back in the result document."""

    command: Command
    pair: str = "g2-so7"
    embedding_file: Path | None = None
    parabolic: str | None = None
    highest_weight: str | None = None
    substitutions: dict[str, str] = Field(default_factory=dict)
    cutoff: int | None = Field(default=None, ge=0)
    check_characters: bool = False
    output_format: OutputFormat = "text"
    output: Path | None = None
    suite: str | None = None

    @field_validator("substitutions")
    @classmethod
    def _known_parameters(cls, value: dict[str, str]) -> dict[str, str]:
        unknown = sorted(set(value) - set(VARIABLES))
        if unknown:
            raise ValueError(f"unknown parameters {', '.join(unknown)}; use {', '.join(VARIABLES)}")
        return value

    def with_cutoff(self, cutoff: int) -> JobSpec:
        return self.model_copy(update={"cutoff": cutoff})


class ResultTable(BaseModel):
    """One table of a result, with plain and LaTeX renderings of the same cells."""

    title: str
    columns: list[str]
    latex_columns: list[str]
    rows: list[list[str]] = Field(default_factory=list)
    latex_rows: list[list[str]] = Field(default_factory=list)

    def add_row(self, text: list[str], latex: list[str] | None = None) -> None:
        latex = text if latex is None else latex
        if len(text) != len(self.columns) or len(latex) != len(self.columns):
            raise UsageError(f"row of {len(text)} cells for {len(self.columns)} columns")
        self.rows.append(text)
        self.latex_rows.append(latex)


class ResultPayload(BaseModel):
    summary: dict[str, Any] = Field(default_factory=dict)
    tables: list[ResultTable] = Field(default_factory=list)
    data: dict[str, Any] = Field(default_factory=dict)


class ResultDocument(BaseModel):
    """What every command returns; serialized as-is for ``--format json``."""

    schema_version: int = SCHEMA_VERSION
    tool_version: str = __version__
    job: JobSpec
    results: ResultPayload
    timing_ms: float | None = None

    @property
    def passed(self) -> bool:
        return bool(self.results.summary.get("passed", True))


def resolve_embedding(job: JobSpec) -> Embedding:
    if job.embedding_file is not None:
        return load_embedding(job.embedding_file)
    try:
        factory = PAIRS[job.pair]
    except KeyError as exc:
        raise UsageError(
            f"unknown pair {job.pair!r}; use {', '.join(PAIRS)} or --embedding FILE"
        ) from exc
    return factory()


def load_embedding(path: Path) -> Embedding:
    """Read an embedding from TOML.

    The file names the two Cartan types and maps each simple generator ``g±i`` of the source
    to a table of target generators and coefficients::

        source = "G2"
        target = "B3"
        [images]
        g1 = { g1 = 1, g3 = 1 }
        "g-1" = { "g-1" = 1, "g-3" = 1 }
    """

    try:
        with path.open("rb") as handle:
            raw = tomllib.load(handle)
    except FileNotFoundError as exc:
        raise UsageError(f"embedding file {path} does not exist") from exc
    except tomllib.TOMLDecodeError as exc:
        raise UsageError(f"embedding file {path} is not valid TOML: {exc}") from exc
    source = _algebra(raw, "source", "ḡ")
    target = _algebra(raw, "target", "g")
    images = raw.get("images")
    if not isinstance(images, dict) or not images:
        raise UsageError(f"embedding file {path} has no [images] table")
    simple_images = {}
    for name, terms in images.items():
        if not isinstance(terms, dict):
            raise UsageError(f"image of {name} must be a table of coefficients")
        simple_images[parse_generator(name)] = LieElement.of(
            (parse_generator(gen), parse_scalar(str(coeff))) for gen, coeff in terms.items()
        )
    return build_embedding(source, target, simple_images)


def resolve_parabolic(job: JobSpec, embedding: Embedding) -> ParabolicSubalgebra:
    if not job.parabolic:
        raise UsageError(f"{job.command} needs --parabolic")
    return ParabolicSubalgebra(embedding.target, parse_crossings(job.parabolic))


def resolve_weight(job: JobSpec, embedding: Embedding) -> Weight:
    """Parse the highest weight and apply the ``--set`` substitutions."""

    if not job.highest_weight:
        raise UsageError(f"{job.command} needs --lambda")
    weight = parse_weight(embedding.target.system, job.highest_weight)
    if not job.substitutions:
        return weight
    assignment = {name: parse_scalar(value) for name, value in job.substitutions.items()}
    return Weight(
        weight.system, [evaluate(c, assignment) for c in weight.simple], weight.basis
    )


def parse_assignment(text: str) -> tuple[str, str]:
    name, sep, value = text.partition("=")
    if not sep or not name.strip() or not value.strip():
        raise UsageError(f"cannot parse substitution {text!r}; expected NAME=VALUE")
    return name.strip(), value.strip()


def _algebra(raw: dict[str, object], key: str, symbol: str) -> ChevalleyAlgebra:
    name = raw.get(key)
    if not isinstance(name, str):
        raise UsageError(f"embedding file needs a {key} Cartan type such as \"G2\"")
    system = parse_system(name)
    return chevalley_algebra(system.family, system.rank, symbol)
