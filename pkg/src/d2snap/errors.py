"""Exception types shared across the package."""

from __future__ import annotations

__all__ = [
    "D2SnapError",
    "ParseError",
    "StructureError",
    "ContractViolation",
    "BudgetError",
]


class D2SnapError(Exception):
    """Base class for every error raised by this package."""


class ParseError(D2SnapError):
    """Input could not be decoded or assembled into a DOM tree."""


class StructureError(D2SnapError):
    """A node was used in a context that requires tree membership."""


class ContractViolation(D2SnapError):
    """An operation was invoked with arguments outside its contract."""


class BudgetError(D2SnapError):
    """No snapshot fit the token budget within the iteration limit.

    Carries the smallest snapshot produced across all iterations so a
    caller can still ship a best-effort result.
    """

    def __init__(self, message: str, smallest=None, estimated_tokens: int | None = None):
        super().__init__(message)
        self.smallest = smallest
        self.estimated_tokens = estimated_tokens
