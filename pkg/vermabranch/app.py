"""Command-line entry point for vermabranch."""

from __future__ import annotations

import argparse
import sys
import time
from collections.abc import Sequence
from pathlib import Path

import structlog
from pydantic import ValidationError

from . import __version__
from .commands import run_job
from .config import AppConfig, dump_config, load_config, save_config
from .errors import UsageError, VermaBranchError
from .jobs import JobSpec, parse_assignment
from .logs import configure_logging
from .regress import SUITE_NAMES
from .render import render

LOG = structlog.get_logger(__name__)

EXIT_REGRESSION = 4


def build_parser(config: AppConfig) -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="vermabranch",
        description="Exact branching of generalized Verma modules along G2 in so(7).",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--pair", default="g2-so7", help="built-in embedding (default g2-so7)")
    common.add_argument("--embedding", type=Path, help="TOML file describing an embedding")
    common.add_argument(
        "--format",
        choices=("text", "json", "latex"),
        default=config.default_format,
        help=f"output format (default {config.default_format})",
    )
    common.add_argument("--out", type=Path, help="write the result to PATH instead of stdout")
    common.add_argument("-v", "--verbose", action="count", default=0, help="more logging")
    common.add_argument("--no-color", action="store_true", help="plain text output")
    common.add_argument("--timing", action="store_true", help="record wall-clock time")

    weighted = argparse.ArgumentParser(add_help=False)
    weighted.add_argument("--parabolic", help="crossing vector such as 1,0,0")
    weighted.add_argument("--lambda", dest="highest_weight", help='highest weight, e.g. "x1*w1+w2"')
    weighted.add_argument(
        "--set",
        dest="substitutions",
        action="append",
        default=[],
        metavar="NAME=VALUE",
        help="substitute a rational value for x1, x2 or x3",
    )

    commands = parser.add_subparsers(dest="command", required=True)
    commands.add_parser("structure", parents=[common], help="embedding data and Casimirs")
    conditions = commands.add_parser(
        "conditions", parents=[common], help="cone conditions for one or all parabolics"
    )
    conditions.add_argument("--parabolic", help="crossing vector; all parabolics when omitted")
    commands.add_parser(
        "decompose", parents=[common, weighted], help="inducing module over the smaller Levi"
    )
    branch = commands.add_parser(
        "branch", parents=[common, weighted], help="branching multiplicities up to a degree"
    )
    branch.add_argument(
        "--cutoff",
        type=int,
        default=config.default_cutoff,
        help=f"largest degree (default {config.default_cutoff})",
    )
    branch.add_argument(
        "--check-characters", action="store_true", help="also compare truncated characters"
    )
    commands.add_parser(
        "singular", parents=[common, weighted], help="top-level singular vectors"
    )
    regress = commands.add_parser("regress", parents=[common], help="run the regression suites")
    regress.add_argument("suite", nargs="?", default="all", help=", ".join((*SUITE_NAMES, "all")))
    settings = commands.add_parser("config", help="show or change the saved defaults")
    settings.add_argument("--color", choices=("on", "off"), help="colour for text output")
    settings.add_argument(
        "--default-format", choices=("text", "json", "latex"), help="format used without --format"
    )
    settings.add_argument("--default-cutoff", type=int, help="cutoff used by branch")
    settings.add_argument("-v", "--verbose", action="count", default=0, help="more logging")
    return parser


def job_from_args(args: argparse.Namespace) -> JobSpec:
    """Translate parsed arguments into a JobSpec; validation errors become usage errors."""

    substitutions = dict(parse_assignment(item) for item in getattr(args, "substitutions", []))
    try:
        return JobSpec(
            command=args.command,
            pair=args.pair,
            embedding_file=args.embedding,
            parabolic=getattr(args, "parabolic", None),
            highest_weight=getattr(args, "highest_weight", None),
            substitutions=substitutions,
            cutoff=getattr(args, "cutoff", None),
            check_characters=getattr(args, "check_characters", False),
            output_format=args.format,
            output=args.out,
            suite=getattr(args, "suite", None),
        )
    except ValidationError as exc:
        messages = "; ".join(error["msg"] for error in exc.errors())
        raise UsageError(messages) from exc


def run(argv: Sequence[str] | None = None, *, config: AppConfig | None = None) -> int:
    """Run one command and return the process exit status."""

    config = config or load_config()
    parser = build_parser(config)
    args = parser.parse_args(argv)
    configure_logging(args.verbose, default=config.log_level)
    if args.command == "config":
        return update_config(config, args)
    color = config.color and not args.no_color
    try:
        job = job_from_args(args)
        started = time.perf_counter()
        document = run_job(job)
        if args.timing or config.record_timing:
            elapsed = (time.perf_counter() - started) * 1000
            document = document.model_copy(update={"timing_ms": round(elapsed, 1)})
        output = render(document, job.output_format, color=color and job.output is None)
        if job.output is not None:
            job.output.parent.mkdir(parents=True, exist_ok=True)
            job.output.write_text(output)
        else:
            sys.stdout.write(output)
    except VermaBranchError as exc:
        LOG.debug("command failed", command=args.command, error=type(exc).__name__)
        sys.stderr.write(f"vermabranch: {exc}\n")
        return exc.exit_code
    if not document.passed:
        return EXIT_REGRESSION
    return 0


def update_config(config: AppConfig, args: argparse.Namespace) -> int:
    """Apply the requested changes, save them, and print the resulting defaults."""

    updated = config
    if args.color is not None:
        updated = updated.with_color(args.color == "on")
    if args.default_format is not None:
        updated = updated.with_default_format(args.default_format)
    if args.default_cutoff is not None:
        updated = updated.with_default_cutoff(args.default_cutoff)
    if updated != config:
        path = save_config(updated)
        LOG.info("config saved", path=str(path))
    sys.stdout.write(dump_config(updated))
    return 0


def main() -> None:
    """Console-script entry point."""

    sys.exit(run())

