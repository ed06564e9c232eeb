"""
Bosonise UI Module
==================
All terminal output flows through this module for consistent styling.
Reports go to stdout; errors, warnings, golden diffs and log records go to
stderr so that JSON on stdout stays byte-stable.
"""

import logging

from rich import box
from rich.console import Console
from rich.logging import RichHandler
from rich.markup import escape
from rich.panel import Panel
from rich.rule import Rule
from rich.style import Style
from rich.table import Table

from bosonise import __version__

console = Console()
err_console = Console(stderr=True)


class Icons:
    ARROW = "▸"
    CHECK = "✔"
    CROSS = "✘"
    WARN = "⚠"
    DIAMOND = "◈"
    ARROW_R = "▶"
    ATOM = "⚛"
    SPIN = "↻"


class Theme:
    PRIMARY = "#00f0ff"
    ACCENT = "#ff00e5"
    SUCCESS = "#00ff9d"
    WARNING = "#ffb300"
    ERROR = "#ff003c"
    DIM = "#475569"
    TEXT = "#f8fafc"
    HIGHLIGHT = "#d946ef"


MINI_BANNER = (
    f"[{Theme.PRIMARY}]{Icons.DIAMOND}[/{Theme.PRIMARY}] "
    f"[bold white]BOSON[/bold white][bold {Theme.HIGHLIGHT}]ISE[/bold {Theme.HIGHLIGHT}] "
    f"[{Theme.DIM}]v{__version__}[/{Theme.DIM}]"
)


def configure_logging(verbose: bool) -> None:
    """Routes library log records through rich on stderr."""
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format="%(message)s",
        datefmt="[%X]",
        handlers=[RichHandler(console=err_console, show_path=False, rich_tracebacks=True)],
        force=True,
    )


# -- Header / Footer ----------------------------------------------------------

def print_version() -> None:
    console.print(MINI_BANNER)


def print_header(subtitle: str = "", icon: str | None = None):
    """Prints the branded header with optional subtitle and icon."""
    console.print()
    console.print(MINI_BANNER)
    console.print(Rule(style=Theme.ACCENT))
    if subtitle:
        icon_str = f"{icon} " if icon else f"{Icons.ARROW_R} "
        console.print(
            f"  [bold {Theme.PRIMARY}]{icon_str}[/bold {Theme.PRIMARY}]"
            f" [{Theme.TEXT}]{subtitle}[/{Theme.TEXT}]"
        )
        console.print()


def print_footer():
    console.print(Rule(style=Theme.DIM))
    console.print()


# -- Status Messages -----------------------------------------------------------

def success(message: str):
    console.print(f"  [{Theme.SUCCESS}]{Icons.CHECK}[/{Theme.SUCCESS}]  [bold]{message}[/bold]")


def warning(message: str):
    err_console.print(f"  [{Theme.WARNING}]{Icons.WARN}[/{Theme.WARNING}]  {message}")


def error(message: str):
    err_console.print(
        f"  [{Theme.ERROR}]{Icons.CROSS}[/{Theme.ERROR}]  "
        f"[bold {Theme.ERROR}]{escape(message)}[/bold {Theme.ERROR}]",
        highlight=False,
    )


def hint(message: str):
    err_console.print(f"  [{Theme.PRIMARY}]{Icons.ARROW}[/{Theme.PRIMARY}]  Hint: {message}")


# -- Tables --------------------------------------------------------------------

def create_table(*columns: str, title: str = "", show_row_numbers: bool = False) -> Table:
    """Creates a styled table with the project's visual identity."""
    table = Table(
        box=box.ROUNDED,
        border_style=Theme.ACCENT,
        header_style=f"bold {Theme.PRIMARY}",
        title=f"[bold {Theme.PRIMARY}]{title}[/bold {Theme.PRIMARY}]" if title else None,
        title_style=f"bold {Theme.PRIMARY}",
        show_edge=True,
        pad_edge=True,
        padding=(0, 1),
        row_styles=[Style(), Style(dim=True)],
        show_lines=False,
    )
    if show_row_numbers:
        table.add_column("#", style=Theme.DIM, width=4)
    for col in columns:
        table.add_column(col, overflow="fold")
    return table


def print_table(table: Table, *, stderr: bool = False):
    target = err_console if stderr else console
    target.print()
    target.print(table)
    target.print()


# -- Panels --------------------------------------------------------------------

def print_summary_panel(title: str, items: list[tuple[str, str]], style: str = "success"):
    """Prints a summary panel with key-value pairs."""
    style_colors = {
        "success": Theme.SUCCESS,
        "error": Theme.ERROR,
        "warning": Theme.WARNING,
        "info": Theme.PRIMARY,
    }
    border_color = style_colors.get(style, Theme.ACCENT)

    lines = [f"  [{Theme.DIM}]{label:<22}[/{Theme.DIM}]  {value}" for label, value in items]
    console.print()
    console.print(Panel(
        "\n".join(lines),
        title=f"[bold]{title}[/bold]",
        border_style=border_color,
        padding=(1, 2),
    ))
    console.print()


# -- Golden Diff ---------------------------------------------------------------

def print_diff_table(changes: dict):
    """Prints a color-coded diff of a report against its golden file."""
    table = create_table("Status", "Field", "Golden", "Output", title="Golden diff")
    for change in changes.get("modified", []):
        golden, output = str(change.get("expected")), str(change.get("actual"))
        if "terms_only_in_golden" in change:
            golden = " ".join(change["terms_only_in_golden"]) or "-"
            output = " ".join(change["terms_only_in_output"]) or "-"
        table.add_row(
            f"[{Theme.WARNING}]~ modified[/{Theme.WARNING}]",
            change["path"],
            golden,
            output,
        )
    for change in changes.get("deleted", []):
        table.add_row(
            f"[{Theme.ERROR}]- missing[/{Theme.ERROR}]",
            change["path"],
            str(change.get("expected")),
            "-",
        )
    for change in changes.get("added", []):
        table.add_row(
            f"[{Theme.WARNING}]+ unlisted[/{Theme.WARNING}]",
            change["path"],
            "-",
            str(change.get("actual")),
        )

    total = sum(len(changes.get(kind, [])) for kind in ("modified", "deleted", "added"))
    unchanged = len(changes.get("unchanged", []))

    print_table(table, stderr=True)
    err_console.print(f"  [{Theme.PRIMARY}]{Icons.ARROW}[/{Theme.PRIMARY}]  {total} change(s), {unchanged} unchanged")


# -- Checklist -----------------------------------------------------------------

def print_checklist(items: list[tuple[str, bool, str]]):
    """Prints a checklist of items with pass/fail status.

    Args:
        items: List of (name, passed, message) tuples.
    """
    for name, passed, message in items:
        if passed:
            console.print(
                f"  [{Theme.SUCCESS}]{Icons.CHECK}[/{Theme.SUCCESS}]  "
                f"{name} [{Theme.DIM}]{message}[/{Theme.DIM}]"
            )
        else:
            console.print(
                f"  [{Theme.ERROR}]{Icons.CROSS}[/{Theme.ERROR}]  "
                f"{name} [{Theme.ERROR}]{message}[/{Theme.ERROR}]"
            )


# -- Key-Value Display ---------------------------------------------------------

def print_kv_list(items: list[tuple[str, str]], title: str = ""):
    if title:
        console.print(f"\n  [bold {Theme.PRIMARY}]{title}[/bold {Theme.PRIMARY}]")
    console.print("\n".join(f"    [{Theme.DIM}]{label:<20}[/{Theme.DIM}]  {value}" for label, value in items))
    console.print()
