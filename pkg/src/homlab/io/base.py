"""Base format reader and registry."""

import logging
import sys
from abc import ABC, abstractmethod
from typing import Any, List, Optional, Tuple

from homlab.errors import FormatError

logger = logging.getLogger(__name__)

STDIN = "-"

# (1-based line number, line text without comment)
Line = Tuple[int, str]


def significant_lines(text: str) -> List[Line]:
    """Strip '#' comments and blank lines, keeping line numbers."""
    lines = []
    for number, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0].strip()
        if content:
            lines.append((number, content))
    return lines


def read_text(path: str) -> Tuple[str, str]:
    """Read a file, or stdin for '-'; returns (text, source name)."""
    if path == STDIN:
        return sys.stdin.read(), "<stdin>"
    with open(path, "r", encoding="utf-8") as infile:
        return infile.read(), path


def parse_int(token: str, what: str, source: str, line: int, minimum: Optional[int] = None) -> int:
    try:
        value = int(token)
    except ValueError:
        raise FormatError(f"Expected an integer {what}, got '{token}'", source, line) from None
    if minimum is not None and value < minimum:
        raise FormatError(f"{what.capitalize()} must be at least {minimum}, got {value}", source, line)
    return value


class BaseFormatReader(ABC):
    """Abstract base for the text formats; a format is recognised by its first keyword."""

    keyword: str = ""

    def can_read(self, first_line: str) -> bool:
        """Check if this reader handles a document starting with this line."""
        return first_line.split()[0] == self.keyword

    @abstractmethod
    def parse(self, lines: List[Line], source: str) -> Any:
        """Build the object from the significant lines of a document.

        Raises:
            FormatError: On malformed input, naming the offending line
        """
        ...


class FormatReaderRegistry:
    """Manages the readers and picks one per document."""

    def __init__(self):
        self.readers: List[BaseFormatReader] = []

    def register(self, reader: BaseFormatReader):
        """Add a reader to the registry."""
        self.readers.append(reader)

    def read(self, text: str, source: str = "<string>") -> Any:
        """Parse a document with the first reader that accepts its first line.

        Raises:
            FormatError: If the document is empty, no reader accepts it, or parsing fails
        """
        lines = significant_lines(text)
        if not lines:
            raise FormatError("Empty document", source)
        number, first = lines[0]
        for reader in self.readers:
            if reader.can_read(first):
                logger.debug("Reading %s with %s", source, type(reader).__name__)
                return reader.parse(lines, source)
        keywords = [r.keyword for r in self.readers]
        raise FormatError(f"Unknown document type '{first.split()[0]}', expected one of {keywords}", source, number)

    def read_file(self, path: str) -> Any:
        """Read and parse a file ('-' for stdin)."""
        text, source = read_text(path)
        return self.read(text, source)
