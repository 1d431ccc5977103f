"""Exception types shared across the package."""


class ImplicitGraphError(Exception):
    """Base class for all errors raised by this package."""


class UsageError(ImplicitGraphError, ValueError):
    """An operation was called outside its precondition."""


class ParseError(ImplicitGraphError, ValueError):
    """Malformed text input (graph6, formula DSL, DAG text)."""

    def __init__(self, message, *, offset=None, line=None, column=None):
        self.offset = offset
        self.line = line
        self.column = column
        where = []
        if line is not None:
            where.append(f"line {line}, column {column}")
        elif offset is not None:
            where.append(f"byte offset {offset}")
        super().__init__(f"{message} ({where[0]})" if where else message)


class UnsupportedFragment(ImplicitGraphError, ValueError):
    """A formula uses constructs outside the fragment an operation handles."""


class BudgetExceeded(ImplicitGraphError):
    """A search gave up before reaching a definitive answer.

    This is not a failure of the input: the question is simply undecided
    within the configured budget.
    """

    def __init__(self, message, *, spent=None, budget=None):
        self.spent = spent
        self.budget = budget
        super().__init__(message)


class VerificationError(ImplicitGraphError):
    """A re-check of a constructed object did not hold."""
