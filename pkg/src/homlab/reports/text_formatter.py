"""Plain text reports: ``key: value`` lines plus tables."""

from prettytable import PrettyTable

from homlab.reports.base import BaseReportFormatter


class TextReportFormatter(BaseReportFormatter):
    """Writes reports whose field lines can be parsed with ``line.split(": ", 1)``."""

    def write_title(self, title: str) -> None:
        self.stream.write(f"# {title}\n")

    def write_field(self, key: str, value: object) -> None:
        self.stream.write(f"{key}: {value}\n")

    def write_section(self, title: str, body: str) -> None:
        self.section_count += 1
        self.stream.write(f"\n[{title}]\n{body}\n")

    def write_table(self, title: str, table: PrettyTable) -> None:
        self.write_section(title, table.get_string())
