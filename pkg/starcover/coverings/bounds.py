"""
Guaranteed-coverage arithmetic.

All bounds are exact :class:`~fractions.Fraction` values; callers compare
against :func:`~starcover.coverings.base.fraction_ceil` of them.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional, Tuple

from .base import quota_gh

#: Ratio ``b / r`` below which a set is covered as an equitable core plus leftover reds.
LOW_RATIO = Fraction(1, 3)
#: Ratio ``b / r`` above which the (5,4)/(4,5) subdivision is used.
HIGH_RATIO = Fraction(4, 5)


def ratio(r: int, b: int) -> Fraction:
    """``min / max`` of the two color counts; 0 for a monochromatic set."""
    hi, lo = max(r, b), min(r, b)
    return Fraction(lo, hi) if hi else Fraction(0)


def bs_bound(r: int, b: int) -> Fraction:
    """4/7 * (alpha + 2) / (alpha + 1) * (r + b) - 4, with alpha = min/max."""
    alpha = ratio(r, b)
    return Fraction(4, 7) * (alpha + 2) / (alpha + 1) * (r + b) - 4


def eight_ninths_bound(r: int, b: int) -> Fraction:
    return Fraction(8, 9) * (r + b) - 4


def upper_range_bound(r: int, b: int) -> Fraction:
    return Fraction(8, 9) * (r + b - 8)


def low_range_bound(r: int, b: int) -> Fraction:
    """Four times the minority count: the whole equitable core."""
    return Fraction(4 * min(r, b))


def separable_quota(r: int, b: int) -> Optional[Tuple[int, int]]:
    """``(g, h)`` with ``r = 3g + h`` and ``b = 3h + g``."""
    return quota_gh(r, b)


def general_t_params(r: int, b: int) -> Optional[Tuple[int, int]]:
    """``(k, t)`` with ``r = 3k - t`` and ``b = k + 2t``, both non-negative."""
    k7, t7 = 2 * r + b, 3 * b - r
    if t7 < 0 or k7 % 7 or t7 % 7:
        return None
    return k7 // 7, t7 // 7


def general_t_floor(t: int) -> int:
    """Smallest k the recursive coverer accepts for a given t."""
    if t == 0:
        return 0
    regular = -(-5 * t // 8)
    reduced = regular - 1
    # the reduction removes 5t - 8k blues and needs that to stay within t
    if reduced >= 0 and 2 * reduced >= t:
        return reduced
    return regular


def admissible(k: int, t: int) -> bool:
    """True when ``(3k - t, k + 2t)`` is within the recursive coverer's range."""
    if k < 0 or t < 0 or 3 * k < t:
        return False
    return k >= general_t_floor(t)
