"""Pytest configuration for local imports and shared algebras."""

from __future__ import annotations

import sys
from pathlib import Path

import pytest

PROJECT_ROOT = Path(__file__).resolve().parents[1]
if PROJECT_ROOT.as_posix() not in sys.path:
    sys.path.insert(0, PROJECT_ROOT.as_posix())

from vermabranch.algebra.embedding import Embedding, g2_in_so7  # noqa: E402
from vermabranch.algebra.lie import ChevalleyAlgebra  # noqa: E402


@pytest.fixture(scope="module")
def embedding() -> Embedding:
    return g2_in_so7()


@pytest.fixture(scope="module")
def so7(embedding: Embedding) -> ChevalleyAlgebra:
    return embedding.target


@pytest.fixture(scope="module")
def g2(embedding: Embedding) -> ChevalleyAlgebra:
    return embedding.source
