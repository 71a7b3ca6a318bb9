"""
Top-level covering of an arbitrary (r, b)-set with a certified lower bound.

With the minority color blue and ``alpha = b / r``:

- ``alpha < 1/3``: drop ``r - 3b`` reds, cover the (3b, b) rest completely;
- ``1/3 <= alpha <= 4/5``: drop a handful of points to reach a
  (3k - t, k + 2t)-set and run the recursive coverer;
- ``alpha > 4/5``: drop at most four points of each color, subdivide into
  (5,4)- and (4,5)-regions and cover eight points of each.
"""

import logging
from fractions import Fraction
from typing import Dict, List, Tuple

from ..core.geometry import Color, PointSet
from ..core.partition import subdivide_s_s1
from ..errors import UnreachableCase
from .base import Certificate, Covering, remove_extreme
from .bounds import HIGH_RATIO, LOW_RATIO, bs_bound, low_range_bound, ratio, upper_range_bound
from .equitable import cover_equitable
from .general import cover_general_t, cover_nine

logger = logging.getLogger(__name__)


def cover_driver(s: PointSet) -> Covering:
    """Cover ``s`` by the branch its color ratio selects; the result carries a certificate."""
    swapped = s.b > s.r
    work = s.swap_colors() if swapped else s
    r, b = work.r, work.b
    alpha = ratio(r, b)

    if alpha < LOW_RATIO:
        covering, certificate = _low_branch(work)
    elif alpha <= HIGH_RATIO:
        covering, certificate = _middle_branch(work)
    else:
        covering, certificate = _high_branch(work)
    certificate.swapped = swapped
    covering.certificate = certificate

    if covering.covered < certificate.bound_ceil:
        raise UnreachableCase(
            "covering falls short of its certified bound",
            {"covered": covering.covered, **certificate.as_dict()},
        )
    logger.info(
        "Driver branch %s on (%d, %d): %d covered, bound %s",
        certificate.branch,
        s.r,
        s.b,
        covering.covered,
        certificate.bound,
    )
    return covering


def _low_branch(s: PointSet) -> Tuple[Covering, Certificate]:
    rest, removed = remove_extreme(s, Color.RED, s.r - 3 * s.b)
    covering = Covering.merge([cover_equitable(rest)], removed)
    return covering, Certificate(
        branch="equitable-core",
        bound=low_range_bound(s.r, s.b),
        params={"excess": s.r - 3 * s.b},
        removed=removed,
    )


def _middle_branch(s: PointSet) -> Tuple[Covering, Certificate]:
    r, b = s.r, s.b
    t, rem = divmod(3 * b - r, 7)
    c = -(-rem // 3)
    k = b - 2 * t - c
    rest, removed_red = remove_extreme(s, Color.RED, 3 * c - rem)
    rest, removed_blue = remove_extreme(rest, Color.BLUE, c)
    removed = removed_red + removed_blue
    logger.debug("(%d, %d): t=%d, s=%d, k=%d after removing %s", r, b, t, rem, k, removed)
    covering = Covering.merge([cover_general_t(rest)], removed)
    return covering, Certificate(
        branch="general-t",
        bound=bs_bound(r, b),
        params={"t": t, "s": rem, "k": k},
        removed=removed,
    )


def _high_branch(s: PointSet) -> Tuple[Covering, Certificate]:
    r, b = s.r, s.b
    n, m = divmod(5 * b - 4 * r, 9)
    if m <= 4:
        h, g, drop_red, drop_blue = n, r - b + n, m, m
    else:
        h, g, drop_red, drop_blue = n + 1, r - b + n, m - 4, m - 5
    rest, removed_red = remove_extreme(s, Color.RED, drop_red)
    rest, removed_blue = remove_extreme(rest, Color.BLUE, drop_blue)
    removed = removed_red + removed_blue
    logger.debug("(%d, %d): n=%d, m=%d, %d (5,4)- and %d (4,5)-regions", r, b, n, m, g, h)

    parts: List[Covering] = []
    if g + h:
        for region in subdivide_s_s1(rest, 4, g, h):
            parts.append(cover_nine(rest.subset(region.members)))
    params: Dict[str, int] = {"n": n, "m": m, "h": h, "g": g}
    covering = Covering.merge(parts, removed)
    return covering, Certificate(
        branch="nine-point-regions",
        bound=upper_range_bound(r, b),
        params=params,
        removed=removed,
    )


def certified_bound(r: int, b: int) -> Fraction:
    """The bound :func:`cover_driver` certifies for any (r, b)-set."""
    hi, lo = max(r, b), min(r, b)
    if ratio(hi, lo) < LOW_RATIO:
        return low_range_bound(hi, lo)
    if ratio(hi, lo) <= HIGH_RATIO:
        return bs_bound(hi, lo)
    return upper_range_bound(hi, lo)

