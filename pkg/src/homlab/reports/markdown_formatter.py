"""Markdown reports."""

from prettytable import MARKDOWN, PrettyTable

from homlab.reports.base import BaseReportFormatter


class MarkdownReportFormatter(BaseReportFormatter):
    """Formats reports as a Markdown document.

    Fields become a bullet list, sections become level-2 headings with a fenced
    block, and tables are rendered in Markdown table style.
    """

    def write_title(self, title: str) -> None:
        self.stream.write(f"# {title}\n\n")

    def write_field(self, key: str, value: object) -> None:
        self.stream.write(f"- **{key}**: {value}\n")

    def write_section(self, title: str, body: str) -> None:
        self.section_count += 1
        self.stream.write(f"\n## {title}\n\n```\n{body}\n```\n")

    def write_table(self, title: str, table: PrettyTable) -> None:
        self.section_count += 1
        styled = table.copy()
        styled.set_style(MARKDOWN)
        self.stream.write(f"\n## {title}\n\n{styled.get_string()}\n")
