"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class SchroederError(Exception):
    """Base class for all errors raised by this package."""


class AddressOutOfTree(SchroederError, LookupError):
    """A node address steps below a leaf."""


class TreeSyntaxError(SchroederError, ValueError):
    """Text does not match the tree grammar."""

    def __init__(self, message: str, position: int, expected: str | None = None):
        self.position = position
        self.expected = expected
        detail = f"{message} at position {position}"
        if expected:
            detail += f" (expected {expected})"
        super().__init__(detail)


class ArityError(SchroederError, ValueError):
    """A Schröder node with fewer than two children."""


class PointError(SchroederError, ValueError):
    """A pointed tree with zero or several point markers."""


class KindMismatch(SchroederError, TypeError):
    """Two trees of different families were compared."""


class NotWellWeighted(SchroederError, ValueError):
    """A weight-2 node has a leaf as its right son."""


class MalformedInput(SchroederError, ValueError):
    """Input reached a configuration that valid data can never produce."""


class TooSmall(SchroederError, ValueError):
    """The operation is only defined for trees with more leaves."""


class InexactDivision(SchroederError, ArithmeticError):
    """A recurrence step left a nonzero remainder."""


class StepBudgetExhausted(SchroederError, RuntimeError):
    """A random walk hit its step cap before reaching the target size."""


class UnknownClass(SchroederError, LookupError):
    """A sampled tree is missing from the enumerated class list."""
