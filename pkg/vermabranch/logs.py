"""Structured logging setup."""

from __future__ import annotations

import logging
import sys

import structlog

_LEVELS = ("WARNING", "INFO", "DEBUG")


def level_for(verbosity: int, default: str = "WARNING") -> str:
    """Map a -v count onto a logging level name, starting from the configured default."""

    base = _LEVELS.index(default) if default in _LEVELS else 0
    return _LEVELS[min(base + max(verbosity, 0), len(_LEVELS) - 1)]


def configure_logging(verbosity: int = 0, *, default: str = "WARNING") -> None:
    """Route structlog events through stdlib logging to stderr."""

    shared = [
        structlog.contextvars.merge_contextvars,
        structlog.stdlib.add_log_level,
        structlog.stdlib.add_logger_name,
        structlog.processors.TimeStamper(fmt="iso"),
    ]
    structlog.configure(
        processors=[*shared, structlog.stdlib.ProcessorFormatter.wrap_for_formatter],
        logger_factory=structlog.stdlib.LoggerFactory(),
        wrapper_class=structlog.stdlib.BoundLogger,
        cache_logger_on_first_use=True,
    )
    formatter = structlog.stdlib.ProcessorFormatter(
        foreign_pre_chain=shared,
        processors=[
            structlog.stdlib.ProcessorFormatter.remove_processors_meta,
            structlog.dev.ConsoleRenderer(colors=False),
        ],
    )
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(formatter)
    root = logging.getLogger()
    root.handlers[:] = [handler]
    root.setLevel(level_for(verbosity, default))
