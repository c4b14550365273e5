"""
Exception hierarchy for the Van Kampen toolkit.

Each family mixes in the builtin a caller would naturally catch, and carries
the exit code the command-line tools report for it.
"""
from typing import Any, Optional

from config.settings import EXIT_INTERNAL, EXIT_PRECONDITION, EXIT_RESOURCE_LIMIT


class VanKampenError(Exception):
    """Base class for all toolkit errors."""

    exit_code = EXIT_INTERNAL


class PreconditionError(VanKampenError, ValueError):
    """Input violates an operation's contract."""

    exit_code = EXIT_PRECONDITION


class ParseError(PreconditionError):
    """Malformed text input (polynomials, presentations, braid files)."""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class UnsupportedEntryError(PreconditionError):
    """Catalog entry lacks the data an operation needs."""


class ResourceLimitError(VanKampenError, RuntimeError):
    """A configured budget was exhausted before a result was found."""

    exit_code = EXIT_RESOURCE_LIMIT


class CertificationError(ResourceLimitError):
    """Root certification ran out of Newton steps."""

    def __init__(self, message: str, best: Any = None):
        self.best = best
        super().__init__(message)


class MonodromyError(ResourceLimitError):
    """Monodromy following could not advance along a segment."""

    def __init__(self, message: str, segment: Any = None, t: Any = None):
        self.segment = segment
        self.t = t
        if segment is not None:
            message = f"{message} (segment {segment}, t={t})"
        super().__init__(message)


class CosetOverflowError(ResourceLimitError):
    """Coset enumeration exceeded its table limit."""

    def __init__(self, max_cosets: int):
        self.max_cosets = max_cosets
        super().__init__(f"coset enumeration exceeded {max_cosets} cosets")


class InternalAssertionError(VanKampenError, AssertionError):
    """An invariant that should always hold was violated."""

    exit_code = EXIT_INTERNAL


class StageError(VanKampenError):
    """Wraps an error raised inside a named pipeline stage."""

    def __init__(self, stage: str, cause: VanKampenError):
        self.stage = stage
        self.cause = cause
        self.exit_code = cause.exit_code
        super().__init__(f"[{stage}] {cause}")
