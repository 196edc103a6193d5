"""Emitters for result documents: rich tables, JSON and LaTeX."""

from __future__ import annotations

from rich.console import Console
from rich.table import Table
from rich.text import Text

from .config import OutputFormat
from .jobs import ResultDocument, ResultTable


def render(document: ResultDocument, fmt: OutputFormat, *, color: bool = True) -> str:
    if fmt == "json":
        return render_json(document)
    if fmt == "latex":
        return render_latex(document)
    return render_text(document, color=color)


def render_json(document: ResultDocument) -> str:
    return document.model_dump_json(indent=2) + "\n"


def render_text(document: ResultDocument, *, color: bool = True, width: int = 120) -> str:
    """Tables plus a summary block, captured from the console."""

    console = Console(width=width, no_color=None if color else True, force_terminal=color)
    with console.capture() as capture:
        for table in document.results.tables:
            console.print(_rich_table(table))
        summary = Table(title="Summary", show_header=False)
        summary.add_column("key", style="bold")
        summary.add_column("value")
        for key, value in document.results.summary.items():
            summary.add_row(key, Text(_plain(value)))
        if document.timing_ms is not None:
            summary.add_row("timing_ms", f"{document.timing_ms:.1f}")
        console.print(summary)
    return capture.get()


def render_latex(document: ResultDocument) -> str:
    return "\n".join(latex_table(table) for table in document.results.tables)


def latex_table(table: ResultTable) -> str:
    lines = [
        f"% {table.title}",
        "\\begin{tabular}{" + "l" * len(table.latex_columns) + "}",
        " & ".join(table.latex_columns) + " \\\\",
        "\\hline",
    ]
    lines.extend(" & ".join(row) + " \\\\" for row in table.latex_rows)
    lines.append("\\end{tabular}")
    return "\n".join(lines) + "\n"


def _rich_table(table: ResultTable) -> Table:
    rendered = Table(title=table.title)
    for column in table.columns:
        rendered.add_column(column, overflow="fold")
    for row in table.rows:
        rendered.add_row(*(Text(cell) for cell in row))
    return rendered


def _plain(value: object) -> str:
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, (list, tuple)):
        return ", ".join(str(item) for item in value) or "-"
    return "-" if value is None else str(value)
