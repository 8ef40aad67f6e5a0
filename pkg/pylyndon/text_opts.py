"""
Terminal text formatting for verdict lines and summary tables.
"""
import re
import sys
from typing import Dict, List, Sequence

TEXT_CODES = {
    "bold": ("\x1b[1m", "\x1b[22m"),
    "red": ("\x1b[31m", "\x1b[39m"),
    "green": ("\x1b[32m", "\x1b[39m"),
    "yellow": ("\x1b[33m", "\x1b[39m"),
}

VERDICT_COLORS = {
    "pass": "green",
    "agree": "green",
    "fail": "red",
    "disagree": "red",
    "inconclusive": "yellow",
    "pole": "yellow",
}

CODES_PATTERN = re.compile("|".join(re.escape(code) for codes in TEXT_CODES.values() for code in codes))


def clear_formatting(text: str) -> str:
    """Remove every attribute code, e.g. before measuring a table cell."""
    return CODES_PATTERN.sub("", text)


def text_attribute(text: object, attribute: str) -> str:
    """Wrap each non-empty line in the attribute codes."""
    start, end = TEXT_CODES[attribute]
    return "\n".join(f"{start}{line}{end}" if line else "" for line in str(text).split("\n"))


def _format_text_tty(text: object, *attributes: str) -> str:
    formatted = str(text)
    for attribute in attributes:
        if attribute in TEXT_CODES:
            formatted = text_attribute(formatted, attribute)
    return formatted


def _format_text_plain(text: object, *attributes: str) -> str:
    return str(text)


# pipes and files get plain text
format_text = _format_text_tty if sys.stdout.isatty() else _format_text_plain


def format_verdict(verdict: str) -> str:
    """Color a verdict word by its meaning."""
    return format_text(verdict, VERDICT_COLORS.get(verdict, "bold"))


def format_table(header: Sequence[str], rows: List[Sequence[object]]) -> str:
    """Left-aligned plain text table, column widths from the widest cell."""
    cells = [[str(c) for c in header]] + [[str(c) for c in row] for row in rows]
    widths = [max(len(clear_formatting(row[i])) for row in cells) for i in range(len(header))]
    lines = [
        "  ".join(cell + " " * (width - len(clear_formatting(cell))) for cell, width in zip(row, widths)).rstrip()
        for row in cells
    ]
    lines.insert(1, "  ".join("-" * width for width in widths))
    return "\n".join(lines)


def format_summary(summary: Dict[str, Dict[str, int]], columns: Sequence[str]) -> str:
    """Render {section: {column: count}} as a table, zero counts left plain."""
    rows = []
    for section, counts in summary.items():
        row: List[object] = [section]
        for column in columns:
            count = counts.get(column, 0)
            row.append(format_text(count, VERDICT_COLORS.get(column, "bold")) if count else count)
        rows.append(row)
    return format_table(["section", *columns], rows)
