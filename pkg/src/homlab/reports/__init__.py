"""Report formatters and renderers."""

from typing import TextIO

from homlab.reports.base import BaseReportFormatter
from homlab.reports.text_formatter import TextReportFormatter
from homlab.reports.markdown_formatter import MarkdownReportFormatter
from homlab.reports.render import (
    colouring_table,
    mapping_table,
    operation_table,
    orbits_table,
    profile_table,
    write_core,
    write_lists,
    write_operations,
    write_property,
    write_verdict,
)

FORMATS = ("text", "markdown")


def create_formatter(format: str, stream: TextIO) -> BaseReportFormatter:
    """Factory function to create the appropriate formatter.

    Args:
        format: Output format, 'text' or 'markdown'
        stream: Where the report goes

    Returns:
        A BaseReportFormatter instance for the requested format
    """
    if format == "markdown":
        return MarkdownReportFormatter(stream)
    elif format == "text":
        return TextReportFormatter(stream)
    raise ValueError(f"Unknown report format '{format}', expected one of {FORMATS}")


__all__ = [
    "BaseReportFormatter",
    "TextReportFormatter",
    "MarkdownReportFormatter",
    "FORMATS",
    "create_formatter",
    "colouring_table",
    "mapping_table",
    "operation_table",
    "orbits_table",
    "profile_table",
    "write_core",
    "write_lists",
    "write_operations",
    "write_property",
    "write_verdict",
]
