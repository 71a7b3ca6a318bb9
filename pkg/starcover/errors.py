"""
Exception hierarchy shared by every starcover module.

Everything raised on purpose derives from :class:`StarcoverError`, so the CLI
can map a single base class to exit code 1. Line searches that legitimately
find nothing return ``None`` instead of raising.
"""

from __future__ import annotations

from typing import TYPE_CHECKING, Any, Dict, Optional, Tuple

if TYPE_CHECKING:
    from .oracle.exact import ExactResult


class StarcoverError(RuntimeError):
    """Base class for all errors raised by starcover."""


# ----------------------------------------------------------------------
# Geometry
# ----------------------------------------------------------------------
class CoordinateRangeError(StarcoverError, ValueError):
    """Raised when a coordinate is outside the exact kernel's range."""


class DegenerateX(StarcoverError):
    """Raised when the shear meant to separate x-coordinates fails."""


# ----------------------------------------------------------------------
# Line searches
# ----------------------------------------------------------------------
class InvalidQuery(StarcoverError, ValueError):
    """Raised when a requested left-side count is out of range."""


class PreconditionUnmet(StarcoverError):
    """Raised when a rotation has no admissible starting line."""


# ----------------------------------------------------------------------
# Partition engine
# ----------------------------------------------------------------------
class SearchExhausted(StarcoverError):
    """Raised when a cutting that should exist was not found."""

    def __init__(self, message: str, diagnostics: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.diagnostics: Dict[str, Any] = diagnostics or {}


class ZeroSignFound(StarcoverError):
    """Signals that a quota couple has sign zero, i.e. a 2-cut exists."""

    def __init__(self, couple: Tuple[int, int]):
        super().__init__(f"sign is zero at couple {couple}")
        self.couple = couple


# ----------------------------------------------------------------------
# Coverings
# ----------------------------------------------------------------------
class QuotaMismatch(StarcoverError, ValueError):
    """Raised when the color counts do not fit the algorithm's quota."""


class NotSeparable(StarcoverError):
    """Raised when red and blue points cannot be split by a line."""


class NotConvex(StarcoverError):
    """Raised when a convex-position algorithm receives an interior point."""


class NotDoubleChain(StarcoverError):
    """Raised when two chains do not form a valid double chain."""


class RangeError(StarcoverError, ValueError):
    """Raised when k is below the floor the recursive coverer supports."""


class UnreachableCase(StarcoverError):
    """Raised when a branch that cannot occur on valid input is entered."""

    def __init__(self, message: str, diagnostics: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.diagnostics: Dict[str, Any] = diagnostics or {}


# ----------------------------------------------------------------------
# Oracle
# ----------------------------------------------------------------------
class BudgetExceeded(StarcoverError):
    """Raised when the exact search runs out of nodes or time."""

    def __init__(self, message: str, best: "ExactResult"):
        super().__init__(message)
        self.best = best


# ----------------------------------------------------------------------
# Generators
# ----------------------------------------------------------------------
class ExhaustedRetries(StarcoverError):
    """Raised when rejection sampling cannot reach general position."""


class ConvexityFailed(StarcoverError):
    """Raised when rounded circle positions are not in convex position."""


class ConstructionFailed(StarcoverError):
    """Raised when an explicit construction misses its defining property."""
