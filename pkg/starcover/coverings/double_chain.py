"""
Full coverings of double chains.

Each step removes one star (two when the longer chain is down to four
points) and keeps the rest a double chain. A star is accepted only if none
of its edges crosses a segment between two remaining points, so any covering
of the remainder is compatible with it.
"""

import logging
from itertools import combinations
from typing import List, Optional, Sequence

from ..core.geometry import Color, PointSet, proper_crossing
from ..errors import UnreachableCase
from .base import Covering, DoubleChain, Star, is_three_one, require_quota_gh, star_of
from .equitable import cover_equitable

logger = logging.getLogger(__name__)


def _isolated(s: PointSet, ids: Sequence[int], remaining: Sequence[int]) -> bool:
    """True when the star on ``ids`` crosses no segment between the other remaining points."""
    star = star_of(s, ids)
    taken = set(ids)
    rest = [p for p in remaining if p not in taken]
    for center, leaf in star.edges():
        a, b = s.xy(center), s.xy(leaf)
        for u, v in combinations(rest, 2):
            if proper_crossing(a, b, s.xy(u), s.xy(v)):
                return False
    return True


def _acceptable(s: PointSet, ids: Sequence[int], remaining: Sequence[int]) -> bool:
    return len(set(ids)) == 4 and is_three_one(s, ids) and _isolated(s, ids, remaining)


def _windows(seq: Sequence[int]) -> List[List[int]]:
    n = len(seq)
    if n < 4:
        return []
    if n == 4:
        return [list(seq)]
    return [[seq[(i + k) % n] for k in range(4)] for i in range(n)]


def _pick(s: PointSet, chain: DoubleChain) -> Optional[List[Star]]:
    """The next star(s) following the block, alternating and monochromatic cases."""
    c1, c2 = list(chain.chain1), list(chain.chain2)
    remaining = c1 + c2
    t = len(c2)

    for window in _windows(c2):
        if not is_three_one(s, window):
            continue
        if t == 4:
            if len(c1) == 4 and is_three_one(s, c1):
                return [star_of(s, c2), star_of(s, c1)]
            break
        if _isolated(s, window, remaining):
            return [star_of(s, window)]

    p1 = c1[0]
    first = s.color(p1)
    candidates: List[List[int]] = []
    monochromatic = len({s.color(i) for i in c2}) == 1
    if not monochromatic:
        if t >= 3:
            candidates += [
                [p1, c2[t - 1], c2[t - 2], c2[t - 3]],
                [p1, c2[t - 1], c2[t - 2], c2[0]],
                [p1, c2[t - 1], c2[0], c2[1]],
            ]
    elif s.color(c2[0]) is first:
        for seq in ([p1] + c2[::-1] + c1[:0:-1], c1 + c2):
            k = next((k for k, p in enumerate(seq) if s.color(p) is not first), None)
            if k is not None and k >= 3:
                candidates.append(seq[k - 3 : k + 1])
    elif t >= 3:
        candidates += [[p1, c2[t - 1], c2[t - 2], c2[t - 3]], [p1, c2[0], c2[1], c2[2]]]

    for ids in candidates:
        if _acceptable(s, ids, remaining):
            return [star_of(s, ids)]

    for window in _windows(chain.circ):
        if _acceptable(s, window, remaining):
            logger.warning("Double chain step fell back to a block of circ(C1 u C2)")
            return [star_of(s, window)]
    return None


def _equitable_phase(s: PointSet, chain: DoubleChain, g: int, h: int) -> List[Star]:
    """Greedy over circ(C1 u C2) taking only stars of the color still needed."""
    allowed = Color.BLUE if h == 0 else Color.RED
    stars: List[Star] = []
    seq = chain.circ
    while seq:
        for window in _windows(seq):
            if not is_three_one(s, window):
                continue
            star = star_of(s, window)
            if s.color(star.center) is allowed and _isolated(s, window, seq):
                stars.append(star)
                seq = [p for p in seq if p not in window]
                break
        else:
            logger.debug("Greedy stalled on %d points, finishing by subdivision", len(seq))
            stars.extend(cover_equitable(s.subset(seq)).stars)
            break
    return stars


def cover_double_chain(dc: DoubleChain) -> Covering:
    """Cover every point of a double chain with (3g+h, g+3h) colors."""
    dc.validate()
    s = dc.points
    g, h = require_quota_gh(s)
    stars: List[Star] = []
    chain = dc
    while len(chain.points):
        if g == 0 or h == 0:
            stars.extend(_equitable_phase(s, chain, g, h))
            break
        if not chain.chain1 or not chain.chain2:
            raise UnreachableCase("a chain emptied before the quotas did", {"g": g, "h": h})
        if len(chain.chain1) > len(chain.chain2):
            chain = chain.swapped()
        picked = _pick(s, chain)
        if picked is None:
            raise UnreachableCase(
                "no coverable block in the double chain",
                {"chain1": list(chain.chain1), "chain2": list(chain.chain2), "g": g, "h": h},
            )
        for star in picked:
            stars.append(star)
            if s.color(star.center) is Color.RED:
                h -= 1
            else:
                g -= 1
        chain = chain.without(p for star in picked for p in star.points)
    logger.debug("Double chain cover with %d stars", len(stars))
    return Covering(stars=stars, uncovered=[])
