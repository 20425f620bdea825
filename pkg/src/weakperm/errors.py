"""Exception hierarchy shared by the solvers and the command line."""

from __future__ import annotations


class WeakPermError(Exception):
    pass


class ParseError(WeakPermError):
    """Syntax or well-formedness error with a source position."""

    def __init__(self, message: str, line: int, column: int, source: str = "<input>"):
        super().__init__(f"{source}:{line}:{column}: {message}")
        self.message = message
        self.line = line
        self.column = column
        self.source = source


class UnsatisfiableError(WeakPermError):
    """The well-founded model violates an integrity constraint."""

    def __init__(self, message: str, model=None, violated=()):
        super().__init__(message)
        self.model = model
        self.violated = tuple(violated)


class NoModelsError(WeakPermError):
    """A sceptical query was asked of a program with no stable models."""


class NoExtensionsError(WeakPermError):
    """A sceptical query was asked of a framework with no stable extensions."""


class BudgetExceeded(WeakPermError):
    def __init__(self, what: str, size: int, cap: int):
        super().__init__(f"{what}: size {size} exceeds cap {cap}")
        self.what = what
        self.size = size
        self.cap = cap


class NonConvergence(WeakPermError):
    pass


class OracleAnomaly(WeakPermError):
    """Raised when a brute-force check finds a structurally impossible result."""
