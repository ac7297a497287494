# errors.py — exception types shared by every chordal-cut module
# Usage:
#   from errors import GraphError, PreconditionError
#
# Notes:
# - GraphError covers malformed values (self-loops, unknown vertices, missing edges).
# - PreconditionError carries a witness so the CLI can name what failed.
# - SoundnessError means a guaranteed property did not hold; it is never swallowed.

from typing import Any, Optional


class ChordalCutError(Exception):
    """Base class for all errors raised by this package."""


class GraphError(ChordalCutError, ValueError):
    pass


class PreconditionError(ChordalCutError):
    def __init__(self, message: str, witness: Optional[Any] = None):
        super().__init__(message)
        self.witness = witness


class DocumentError(ChordalCutError):
    def __init__(self, message: str, line: int = 0, column: int = 0):
        where = f"line {line}" + (f", column {column}" if column else "")
        super().__init__(f"{message} at {where}" if line else message)
        self.line = line
        self.column = column


class SizeBoundError(ChordalCutError):
    pass


class SoundnessError(ChordalCutError, AssertionError):
    pass


class GenerationError(ChordalCutError):
    """Random generation could not meet its parameters within the retry budget."""
