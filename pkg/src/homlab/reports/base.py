"""Abstract base class for all report formatters."""

from abc import ABC, abstractmethod
from typing import TextIO

from prettytable import PrettyTable


class BaseReportFormatter(ABC):
    """Abstract base for all report formatters.

    Formatters write to a stream they do not own: open() starts a report and
    close() flushes it. Reports are written field by field, with tables and
    free-form sections in between, so a command never builds its report in memory.
    """

    section_count: int = 0

    def __init__(self, stream: TextIO):
        self.stream = stream
        self.section_count = 0

    def open(self) -> None:
        """Start a report."""
        self.section_count = 0

    def close(self) -> None:
        """Finish the report."""
        self.stream.flush()

    @abstractmethod
    def write_title(self, title: str) -> None:
        ...

    @abstractmethod
    def write_field(self, key: str, value: object) -> None:
        """Write one machine-parsable key/value pair."""
        ...

    @abstractmethod
    def write_section(self, title: str, body: str) -> None:
        """Write a titled block of preformatted text (traces, structures)."""
        ...

    @abstractmethod
    def write_table(self, title: str, table: PrettyTable) -> None:
        ...

    def __enter__(self):
        self.open()
        return self

    def __exit__(self, exc_type, exc_val, exc_tb):
        self.close()
        return False
