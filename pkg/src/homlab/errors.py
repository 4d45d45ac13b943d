"""Exception types raised by homlab.

Every error subclasses the builtin it refines, so callers that only care about
``ValueError`` or ``RuntimeError`` keep working.
"""

from typing import Optional


class HomlabError(Exception):
    """Marker base for all homlab-specific errors."""


class SignatureMismatchError(HomlabError, ValueError):
    """Two structures (or a structure and a formula) disagree on their signature."""


class FormatError(HomlabError, ValueError):
    """A text file could not be parsed.

    Args:
        message: What went wrong
        source: File name (or '<stdin>' / '<string>')
        line: 1-based line number, if known
    """

    def __init__(self, message: str, source: str = "<string>", line: Optional[int] = None):
        self.source = source
        self.line = line
        where = f"{source}:{line}" if line is not None else source
        super().__init__(f"{where}: {message}")


class GuardExceededError(HomlabError, RuntimeError):
    """An exhaustive computation would exceed a configured cap."""

    def __init__(self, guard: str, size: int, limit: int, what: str = ""):
        self.guard = guard
        self.size = size
        self.limit = limit
        detail = f" ({what})" if what else ""
        super().__init__(f"guard '{guard}' exceeded{detail}: {size} > {limit}")


class OracleInconsistencyError(HomlabError, RuntimeError):
    """A decision oracle accepted an instance but every pin extension was rejected."""


class VerificationError(HomlabError, RuntimeError):
    """A produced certificate failed re-verification."""
