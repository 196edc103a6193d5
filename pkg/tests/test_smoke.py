"""Smoke tests for the package entry points."""

import pytest

from vermabranch import __version__
from vermabranch.app import run
from vermabranch.config import AppConfig


def test_version_string() -> None:
    assert __version__ == "0.1.0"


def test_version_flag(capsys: pytest.CaptureFixture[str]) -> None:
    with pytest.raises(SystemExit) as excinfo:
        run(["--version"], config=AppConfig())

    assert excinfo.value.code == 0
    assert capsys.readouterr().out.strip() == "vermabranch 0.1.0"
