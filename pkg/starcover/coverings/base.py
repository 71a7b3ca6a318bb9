"""
Covering Value Types
Stars, coverings, bound certificates and double chains shared by every coverer
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

from ..core.geometry import (
    Color,
    PointSet,
    convex_hull_points,
    point_in_cone,
    proper_crossing,
    signed_area2,
)
from ..errors import NotDoubleChain, QuotaMismatch

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Star:
    """A K_{1,3}: one center joined to three leaves of the other color."""

    center: int
    leaves: Tuple[int, int, int]

    def __post_init__(self):
        if len(self.leaves) != 3:
            raise ValueError("a star has exactly three leaves")
        if len({self.center, *self.leaves}) != 4:
            raise ValueError(f"star ids must be distinct: {self.center}, {self.leaves}")

    @property
    def points(self) -> Tuple[int, int, int, int]:
        return (self.center, *self.leaves)

    def edges(self) -> List[Tuple[int, int]]:
        return [(self.center, leaf) for leaf in self.leaves]

    def colors_ok(self, s: PointSet) -> bool:
        center = s.color(self.center)
        return all(s.color(leaf) is center.other for leaf in self.leaves)


def star_of(s: PointSet, ids: Iterable[int]) -> Star:
    """The star on four ids split 3+1 by color, centered at the odd one."""
    ids = list(ids)
    reds = [i for i in ids if s.color(i) is Color.RED]
    blues = [i for i in ids if s.color(i) is Color.BLUE]
    if len(ids) != 4 or {len(reds), len(blues)} != {1, 3}:
        raise QuotaMismatch(f"ids {ids} are not three of one color and one of the other")
    if len(reds) == 1:
        return Star(reds[0], tuple(sorted(blues)))  # type: ignore[arg-type]
    return Star(blues[0], tuple(sorted(reds)))  # type: ignore[arg-type]


def is_three_one(s: PointSet, ids: Sequence[int]) -> bool:
    reds = sum(1 for i in ids if s.color(i) is Color.RED)
    return len(ids) == 4 and reds in (1, 3)


def fraction_ceil(value: Fraction) -> int:
    return -(-value.numerator // value.denominator)


@dataclass
class Certificate:
    """Which branch produced a covering and the lower bound it guarantees."""

    branch: str
    bound: Fraction
    params: Dict[str, int] = field(default_factory=dict)
    removed: List[int] = field(default_factory=list)
    swapped: bool = False

    @property
    def bound_ceil(self) -> int:
        return fraction_ceil(self.bound)

    def as_dict(self) -> Dict[str, Any]:
        return {
            "branch": self.branch,
            "params": dict(self.params),
            "removed": list(self.removed),
            "swapped": self.swapped,
            "bound": str(self.bound),
            "bound_ceil": self.bound_ceil,
        }


@dataclass
class Covering:
    """
    Pairwise non-crossing stars plus the uncovered ids.

    Coverings from disjoint convex regions combine with :meth:`merge`.
    """

    stars: List[Star] = field(default_factory=list)
    uncovered: List[int] = field(default_factory=list)
    certificate: Optional[Certificate] = None

    @property
    def covered(self) -> int:
        return 4 * len(self.stars)

    @property
    def covered_ids(self) -> List[int]:
        return [i for star in self.stars for i in star.points]

    @classmethod
    def merge(cls, parts: Iterable["Covering"], extra_uncovered: Iterable[int] = ()) -> "Covering":
        stars: List[Star] = []
        uncovered: List[int] = list(extra_uncovered)
        for part in parts:
            stars.extend(part.stars)
            uncovered.extend(part.uncovered)
        return cls(stars=stars, uncovered=sorted(uncovered))

    @classmethod
    def empty(cls, s: PointSet) -> "Covering":
        return cls(stars=[], uncovered=sorted(s.ids))

    def center_counts(self, s: PointSet) -> Tuple[int, int]:
        """``(red-centered, blue-centered)`` star counts."""
        red = sum(1 for star in self.stars if s.color(star.center) is Color.RED)
        return red, len(self.stars) - red

    def __repr__(self) -> str:
        return f"Covering(stars={len(self.stars)}, uncovered={len(self.uncovered)})"


def quota_gh(r: int, b: int) -> Optional[Tuple[int, int]]:
    """``(g, h)`` with ``r = 3g + h`` and ``b = 3h + g``, or ``None``."""
    g8, h8 = 3 * r - b, 3 * b - r
    if g8 < 0 or h8 < 0 or g8 % 8 or h8 % 8:
        return None
    return g8 // 8, h8 // 8


def require_quota_gh(s: PointSet) -> Tuple[int, int]:
    quota = quota_gh(s.r, s.b)
    if quota is None:
        raise QuotaMismatch(f"({s.r}, {s.b}) is not (3g+h, 3h+g) for any g, h >= 0")
    return quota


# ----------------------------------------------------------------------
# Double chains
# ----------------------------------------------------------------------
@dataclass(frozen=True)
class DoubleChain:
    """
    Two facing convex chains.

    ``chain1`` lists ``p1..ps`` and ``chain2`` lists ``q1..qt``, each CCW
    along its own hull.
    """

    points: PointSet
    chain1: Tuple[int, ...]
    chain2: Tuple[int, ...]

    def validate(self) -> None:
        """Raise :class:`NotDoubleChain` when any defining property fails."""
        c1, c2 = list(self.chain1), list(self.chain2)
        if not c1 or not c2:
            raise NotDoubleChain("both chains must be non-empty")
        if set(c1) & set(c2):
            raise NotDoubleChain("chains share points")
        if sorted(c1 + c2) != sorted(self.points.ids):
            raise NotDoubleChain("chains do not partition the point set")
        for name, chain in (("chain1", c1), ("chain2", c2)):
            if not self._ccw_convex(chain):
                raise NotDoubleChain(f"{name} is not a convex chain in CCW order")
        xy = self.points.xy
        if len(c1) >= 2 and not all(signed_area2(xy(c1[-1]), xy(c1[0]), xy(q)) > 0 for q in c2):
            raise NotDoubleChain("chain2 is not strictly left of ps -> p1")
        if len(c2) >= 2 and not all(signed_area2(xy(c2[-1]), xy(c2[0]), xy(p)) > 0 for p in c1):
            raise NotDoubleChain("chain1 is not strictly left of qt -> q1")
        for p in c1:
            for q in c2:
                if self._enters(c1, p, q) or self._enters(c2, q, p):
                    raise NotDoubleChain(f"segment {p}-{q} crosses a chain hull")

    def _ccw_convex(self, chain: List[int]) -> bool:
        if len(chain) <= 2:
            return True
        hull = convex_hull_points([self.points.point(i) for i in chain])
        if len(hull) != len(chain):
            return False
        start = hull.index(chain[0])
        return hull[start:] + hull[:start] == chain

    def _enters(self, chain: List[int], vertex: int, other: int) -> bool:
        """True when the segment from hull vertex ``vertex`` to ``other`` crosses the chain's hull."""
        xy = self.points.xy
        if len(chain) == 2:
            a, b = chain
            return proper_crossing(xy(a), xy(b), xy(vertex), xy(other))
        if len(chain) < 3:
            return False
        i = chain.index(vertex)
        nxt, prev = chain[(i + 1) % len(chain)], chain[i - 1]
        return point_in_cone(xy(vertex), xy(nxt), xy(prev), xy(other))

    def without(self, ids: Iterable[int]) -> "DoubleChain":
        dropped = set(ids)
        return DoubleChain(
            self.points.without(dropped),
            tuple(i for i in self.chain1 if i not in dropped),
            tuple(i for i in self.chain2 if i not in dropped),
        )

    def swapped(self) -> "DoubleChain":
        return DoubleChain(self.points, self.chain2, self.chain1)

    @property
    def circ(self) -> List[int]:
        return list(self.chain1) + list(self.chain2)


def remove_extreme(s: PointSet, color: Color, count: int) -> Tuple[PointSet, List[int]]:
    """
    Drop ``count`` points of ``color``, one at a time, choosing the lowest
    (then leftmost) such vertex of the current hull, or of the whole set when
    no hull vertex has that color.
    """
    removed: List[int] = []
    current = s
    for _ in range(count):
        hull = set(convex_hull_points(current.points))
        pool = [p for p in current.of_color(color) if p.id in hull] or current.of_color(color)
        if not pool:
            raise QuotaMismatch(f"no {color.name.lower()} point left to remove")
        victim = min(pool, key=lambda p: (p.y, p.x))
        removed.append(victim.id)
        current = current.without([victim.id])
    if removed:
        logger.debug("Removed %d %s points: %s", count, color.name.lower(), removed)
    return current, removed
