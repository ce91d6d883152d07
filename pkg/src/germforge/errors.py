"""Exception hierarchy shared by every module.

The CLI maps these onto exit codes: usage/parse problems exit 1,
mathematical inconsistencies exit 2, resource caps exit 3.
"""

from __future__ import annotations


class GermforgeError(Exception):
    """Base class for all library errors."""

    exit_code = 1


class ParseError(GermforgeError):
    def __init__(self, message: str, text: str = "", pos: int | None = None):
        self.text = text
        self.pos = pos
        if pos is not None:
            line = text.count("\n", 0, pos) + 1
            col = pos - (text.rfind("\n", 0, pos) + 1) + 1
            self.line, self.column = line, col
            message = f"{message} (line {line}, column {col})"
        else:
            self.line = self.column = None
        super().__init__(message)


class UsageError(GermforgeError):
    """Bad group spec, bad germ document, unknown family, etc."""


class VariableMismatchError(GermforgeError):
    pass


class MathematicalInconsistency(GermforgeError):
    exit_code = 2


class InexactDivisionError(MathematicalInconsistency):
    def __init__(self, message: str, remainder=None):
        self.remainder = remainder
        if remainder is not None:
            message = f"{message}; remainder = {remainder}"
        super().__init__(message)


class NoSolutionError(MathematicalInconsistency):
    """A graded linear solve had no solution (input outside the span)."""

    def __init__(self, message: str, part=None):
        self.part = part
        super().__init__(message)


class NotInvariantError(MathematicalInconsistency):
    pass


class NotReflectionGroupError(MathematicalInconsistency):
    pass


class InvalidGermError(MathematicalInconsistency):
    pass


class OrderCapExceeded(GermforgeError):
    exit_code = 3
