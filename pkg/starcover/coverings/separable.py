"""
Full coverings of linearly separable (3g+h, 3h+g)-sets.

Stars are peeled off the convex hull: the hull edge joining the two colors
at one end is followed through two deletions, and the third edge found
becomes the supporting line of the next star.
"""

import logging
from typing import List, Optional, Set, Tuple

from ..core.geometry import Color, DirectedLine, PointSet, convex_hull_points
from ..core.lines import find_line_with_counts
from ..errors import NotSeparable, UnreachableCase
from .base import Covering, Star, require_quota_gh

logger = logging.getLogger(__name__)


def is_linearly_separable(s: PointSet) -> Optional[DirectedLine]:
    """A point-free line with every red strictly left and every blue strictly right."""
    return find_line_with_counts(s, s.r, 0)


def _bridge(s: PointSet, active: Set[int], center: Color) -> Tuple[int, int]:
    """The hull edge going CCW from a ``center``-colored vertex to the other color."""
    hull = convex_hull_points([s.point(i) for i in sorted(active)])
    n = len(hull)
    if n == 2:
        a, b = hull
        return (a, b) if s.color(a) is center else (b, a)
    for i in range(n):
        a, b = hull[i], hull[(i + 1) % n]
        if s.color(a) is center and s.color(b) is center.other:
            return a, b
    raise UnreachableCase("separable hull has no bichromatic edge", {"active": len(active)})


def _peel(s: PointSet, active: Set[int], center: Color, count: int) -> List[Star]:
    stars: List[Star] = []
    for _ in range(count):
        _, q1 = _bridge(s, active, center)
        active.discard(q1)
        _, q2 = _bridge(s, active, center)
        active.discard(q2)
        p3, q3 = _bridge(s, active, center)
        active.difference_update((p3, q3))
        stars.append(Star(p3, (q1, q2, q3)))
    return stars


def cover_linearly_separable(s: PointSet, line: Optional[DirectedLine] = None) -> Covering:
    """
    Cover all points of a separable set with h red-centered then g blue-centered stars.

    ``line`` must have every red strictly left and every blue strictly right;
    when omitted one is searched for.
    """
    g, h = require_quota_gh(s)
    if line is None:
        line = is_linearly_separable(s)
        if line is None:
            raise NotSeparable("no line separates the red points from the blue points")
    for p in s:
        if line.side(p.xy) != (1 if p.is_red else -1):
            raise NotSeparable(f"point {p.id} is on the wrong side of {line}")

    active = set(s.ids)
    stars = _peel(s, active, Color.RED, h)
    stars += _peel(s, active, Color.BLUE, g)
    logger.debug("Separable cover: %d red-centered, %d blue-centered stars", h, g)
    return Covering(stars=stars, uncovered=sorted(active))
