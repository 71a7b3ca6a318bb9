"""
Coverings of point sets in convex position.

Two algorithms share the cyclic hull order:

- :func:`cover_convex_greedy` removes blocks of four consecutive points
  split 3+1 by color and finishes the two alternating patterns that have no
  such block with an explicit construction. At most four points stay
  uncovered.
- :func:`max_cover_convex` / :func:`decide_convex_full` run an interval
  dynamic program in which the first point of an interval is either skipped
  or the lowest point of a star whose four points cut the interval into
  independent gaps.
"""

import logging
from typing import Dict, List, Optional, Sequence, Tuple

from ..core.geometry import Color, PointSet, convex_hull
from ..errors import NotConvex, UnreachableCase
from .base import Covering, Star, is_three_one, quota_gh, require_quota_gh, star_of

logger = logging.getLogger(__name__)

Interval = Tuple[int, int]
StarChoice = Optional[Tuple[int, int, int, int]]


def convex_order(s: PointSet) -> List[int]:
    """Point ids in CCW hull order; every point must be a hull vertex."""
    hull = convex_hull(s)
    if len(hull) != len(s):
        raise NotConvex(f"{len(s) - len(hull)} points are not on the convex hull")
    return hull


# ----------------------------------------------------------------------
# Greedy
# ----------------------------------------------------------------------
def cover_convex_greedy(s: PointSet) -> Covering:
    """Cover all but at most four points of a convex (3g+h, 3h+g)-set."""
    g, h = require_quota_gh(s)
    seq = convex_order(s)
    stars: List[Star] = []
    i = misses = 0
    while len(seq) >= 4 and misses < len(seq):
        n = len(seq)
        window = [seq[(i + k) % n] for k in range(4)]
        if is_three_one(s, window):
            star = star_of(s, window)
            red_center = s.color(star.center) is Color.RED
            if (h if red_center else g) > 0:
                stars.append(star)
                if red_center:
                    h -= 1
                else:
                    g -= 1
                resume = seq[(i - 3) % n]
                seq = [p for p in seq if p not in window]
                i = seq.index(resume) if resume in seq else 0
                misses = 0
                continue
        i = (i + 1) % n
        misses += 1

    if seq:
        if g != h or g == 0:
            raise UnreachableCase(
                "greedy stalled on a non-alternating remainder", {"g": g, "h": h, "left": len(seq)}
            )
        rest, uncovered = _alternating_remainder(s, seq)
        stars.extend(rest)
    else:
        uncovered = []
    logger.debug("Convex greedy: %d stars, %d uncovered", len(stars), len(uncovered))
    return Covering(stars=stars, uncovered=sorted(uncovered))


def _alternating_remainder(s: PointSet, seq: Sequence[int]) -> Tuple[List[Star], List[int]]:
    """Stars for the RB... and RRBB... cyclic patterns, leaving four points uncovered."""
    n = len(seq)
    colors = [s.color(p) for p in seq]
    if all(colors[k] is not colors[(k + 1) % n] for k in range(n)):
        start, offset = 0, 0
    else:
        start = next(
            (
                k
                for k in range(n)
                if colors[k] is colors[(k + 1) % n] and colors[k - 1] is not colors[k]
            ),
            None,
        )
        pairs = start is not None and all(
            colors[(start + k) % n] is colors[(start + k + 1) % n]
            for k in range(0, n, 2)
        )
        if not pairs or any(
            colors[(start + k) % n] is colors[(start + k + 2) % n] for k in range(n)
        ):
            raise UnreachableCase("remainder is neither RB nor RRBB alternating", {"n": n})
        offset = 1

    def at(number: int) -> int:
        return seq[(start + number - 1) % n]

    g = n // 8
    stars: List[Star] = []
    used = set()
    for k in range(1, 2 * g):
        ids = [at(3 * k - 2), at(3 * k - 1), at(3 * k), at(n - k - offset)]
        stars.append(star_of(s, ids))
        used.update(ids)
    return stars, [p for p in seq if p not in used]


# ----------------------------------------------------------------------
# Interval dynamic program
# ----------------------------------------------------------------------
class _IntervalTable:
    """Colors and prefix counts over the linear hull order."""

    def __init__(self, s: PointSet, order: List[int]):
        self.s = s
        self.order = order
        self.red = [s.color(p) is Color.RED for p in order]
        self.prefix = [0]
        for is_red in self.red:
            self.prefix.append(self.prefix[-1] + is_red)

    def reds(self, i: int, j: int) -> int:
        return self.prefix[j + 1] - self.prefix[i] if i <= j else 0

    def star_ok(self, i: int, j1: int, j2: int, j3: int) -> bool:
        reds = self.red[i] + self.red[j1] + self.red[j2] + self.red[j3]
        return reds in (1, 3)

    def fully_coverable_counts(self, i: int, j: int) -> bool:
        if i > j:
            return True
        reds = self.reds(i, j)
        return quota_gh(reds, j - i + 1 - reds) is not None


def _max_table(t: _IntervalTable) -> Tuple[Dict[Interval, int], Dict[Interval, StarChoice]]:
    n = len(t.order)
    best: Dict[Interval, int] = {}
    choice: Dict[Interval, StarChoice] = {}

    def value(i: int, j: int) -> int:
        return best[(i, j)] if i <= j else 0

    for length in range(1, n + 1):
        for i in range(0, n - length + 1):
            j = i + length - 1
            top, pick = value(i + 1, j), None
            for j1 in range(i + 1, j + 1):
                for j2 in range(j1 + 1, j + 1):
                    for j3 in range(j2 + 1, j + 1):
                        if not t.star_ok(i, j1, j2, j3):
                            continue
                        total = (
                            4
                            + value(i + 1, j1 - 1)
                            + value(j1 + 1, j2 - 1)
                            + value(j2 + 1, j3 - 1)
                            + value(j3 + 1, j)
                        )
                        if total > top:
                            top, pick = total, (i, j1, j2, j3)
            best[(i, j)] = top
            choice[(i, j)] = pick
    return best, choice


def _full_table(t: _IntervalTable) -> Dict[Interval, StarChoice]:
    """Witness star per fully coverable interval; missing keys are not coverable."""
    n = len(t.order)
    full: Dict[Interval, StarChoice] = {}

    def ok(i: int, j: int) -> bool:
        return i > j or (i, j) in full

    for length in range(4, n + 1, 4):
        for i in range(0, n - length + 1):
            j = i + length - 1
            if not t.fully_coverable_counts(i, j):
                continue
            found = None
            for j1 in range(i + 1, j + 1, 4):
                if not ok(i + 1, j1 - 1):
                    continue
                for j2 in range(j1 + 1, j + 1, 4):
                    if not ok(j1 + 1, j2 - 1):
                        continue
                    for j3 in range(j2 + 1, j + 1, 4):
                        if (j - j3) % 4:
                            continue
                        if t.star_ok(i, j1, j2, j3) and ok(j2 + 1, j3 - 1) and ok(j3 + 1, j):
                            found = (i, j1, j2, j3)
                            break
                    if found:
                        break
                if found:
                    break
            if found:
                full[(i, j)] = found
    return full


def _collect(t: _IntervalTable, choice: Dict[Interval, StarChoice], i: int, j: int) -> List[Star]:
    stars: List[Star] = []
    stack = [(i, j)]
    while stack:
        i, j = stack.pop()
        if i > j:
            continue
        pick = choice.get((i, j))
        if pick is None:
            stack.append((i + 1, j))
            continue
        a, j1, j2, j3 = pick
        stars.append(star_of(t.s, [t.order[a], t.order[j1], t.order[j2], t.order[j3]]))
        stack.extend([(a + 1, j1 - 1), (j1 + 1, j2 - 1), (j2 + 1, j3 - 1), (j3 + 1, j)])
    return stars


def max_cover_convex(s: PointSet) -> Covering:
    """A covering of a convex set with the most covered points."""
    order = convex_order(s)
    if not order:
        return Covering()
    t = _IntervalTable(s, order)
    best, choice = _max_table(t)
    stars = _collect(t, choice, 0, len(order) - 1)
    covered = {p for star in stars for p in star.points}
    logger.debug("Convex DP: %d of %d points covered", best[(0, len(order) - 1)], len(order))
    return Covering(stars=stars, uncovered=sorted(set(s.ids) - covered))


def decide_convex_full(s: PointSet) -> Tuple[bool, Optional[Covering]]:
    """Whether a convex set has a covering with no uncovered point, plus a witness."""
    order = convex_order(s)
    if not order:
        return True, Covering()
    if quota_gh(s.r, s.b) is None:
        return False, None
    t = _IntervalTable(s, order)
    full = _full_table(t)
    key = (0, len(order) - 1)
    if key not in full:
        return False, None
    return True, Covering(stars=_collect(t, full, *key), uncovered=[])
