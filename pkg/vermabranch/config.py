"""App configuration loading helpers."""

from __future__ import annotations

import tomllib
from pathlib import Path
from typing import Literal

from pydantic import BaseModel

CONFIG_FILE = Path.home() / ".config" / "vermabranch" / "config.toml"

OutputFormat = Literal["text", "json", "latex"]
LogLevel = Literal["WARNING", "INFO", "DEBUG"]


class AppConfig(BaseModel):
    """Shape of the configuration file."""

    color: bool = True
    default_format: OutputFormat = "text"
    default_cutoff: int = 4
    log_level: LogLevel = "WARNING"
    record_timing: bool = False

    def with_color(self, enabled: bool) -> AppConfig:
        """Return a copy with the colour toggle updated."""

        return self.model_copy(update={"color": enabled})

    def with_default_format(self, fmt: OutputFormat) -> AppConfig:
        return self.model_copy(update={"default_format": fmt})

    def with_default_cutoff(self, cutoff: int) -> AppConfig:
        """Return a copy with a new default branching cutoff."""

        return self.model_copy(update={"default_cutoff": max(cutoff, 0)})


def load_config() -> AppConfig:
    """Load configuration from disk; fall back to defaults if missing."""

    try:
        data = _read_config_file()
    except FileNotFoundError:
        return AppConfig()
    except (tomllib.TOMLDecodeError, OSError):
        return AppConfig()
    return AppConfig(**data)


def dump_config(config: AppConfig) -> str:
    """The configuration as TOML text."""

    lines = [
        f"color = {str(config.color).lower()}",
        f'default_format = "{config.default_format}"',
        f"default_cutoff = {config.default_cutoff}",
        f'log_level = "{config.log_level}"',
        f"record_timing = {str(config.record_timing).lower()}",
    ]
    return "\n".join(lines) + "\n"


def save_config(config: AppConfig) -> Path:
    """Persist configuration to disk and return the file written."""

    CONFIG_FILE.parent.mkdir(parents=True, exist_ok=True)
    CONFIG_FILE.write_text(dump_config(config))
    return CONFIG_FILE


def _read_config_file() -> dict[str, object]:
    with CONFIG_FILE.open("rb") as handle:
        raw = tomllib.load(handle)
    data: dict[str, object] = {}
    color = raw.get("color")
    if isinstance(color, bool):
        data["color"] = color
    fmt = raw.get("default_format")
    if fmt in ("text", "json", "latex"):
        data["default_format"] = fmt
    cutoff = raw.get("default_cutoff")
    if isinstance(cutoff, int) and not isinstance(cutoff, bool) and cutoff >= 0:
        data["default_cutoff"] = cutoff
    level = raw.get("log_level")
    if isinstance(level, str) and level.upper() in ("WARNING", "INFO", "DEBUG"):
        data["log_level"] = level.upper()
    timing = raw.get("record_timing")
    if isinstance(timing, bool):
        data["record_timing"] = timing
    return data
