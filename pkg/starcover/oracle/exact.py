"""
Exact maximum coverings by backtracking.

The search always branches on the lowest-id unassigned point, trying in order:
the point as a star center, as a leaf, and uncovered. Placed edges are checked
for proper crossings incrementally, and a branch is cut when even a
crossing-free completion matching the remaining color counts could not beat
the incumbent.
"""

from __future__ import annotations

import logging
import time
from dataclasses import dataclass
from itertools import combinations
from typing import List, Optional, Set, Tuple

from ..config import settings
from ..core.geometry import Color, PointSet, Vector, proper_crossing
from ..coverings.base import Covering, Star
from ..errors import BudgetExceeded

logger = logging.getLogger(__name__)

#: Time is read once every this many nodes.
_CLOCK_STRIDE = 1024

Edge = Tuple[Vector, Vector]


@dataclass
class ExactResult:
    """Best covering found, its size and whether the search finished."""

    best_covering: Covering
    c_of_s: int  # covered points
    nodes_explored: int
    optimal: bool = True

    @property
    def u_of_s(self) -> int:
        return len(self.best_covering.uncovered)


def count_bound(reds: int, blues: int) -> int:
    """Most points any x red-centered and y blue-centered stars can cover."""
    best = 0
    for x in range(min(blues // 3, reds) + 1):
        y = min((reds - x) // 3, blues - 3 * x)
        best = max(best, 4 * (x + y))
    return best


class ExactSearch:
    """One exhaustive search over ``s`` with a node and wall-clock budget."""

    def __init__(self, s: PointSet, budget_nodes: Optional[int] = None, budget_secs: Optional[float] = None):
        self.s = s
        self.budget_nodes = budget_nodes if budget_nodes is not None else settings.budget_nodes
        self.budget_secs = budget_secs if budget_secs is not None else settings.budget_secs
        self.nodes = 0
        self.best: List[Star] = []
        self.ceiling = count_bound(s.r, s.b)
        self._deadline = 0.0

    def run(self) -> ExactResult:
        self._deadline = time.monotonic() + self.budget_secs
        free = set(self.s.ids)
        try:
            self._search(free, [], [], 0)
        except _OutOfBudget as stop:
            result = self._result(optimal=False)
            raise BudgetExceeded(f"{stop} after {self.nodes} nodes", result) from None
        result = self._result(optimal=True)
        logger.info(
            "Exact search on (%d, %d): %d covered, %d nodes", self.s.r, self.s.b, result.c_of_s, self.nodes
        )
        return result

    def _result(self, optimal: bool) -> ExactResult:
        covered = {p for star in self.best for p in star.points}
        covering = Covering(stars=list(self.best), uncovered=sorted(set(self.s.ids) - covered))
        return ExactResult(
            best_covering=covering,
            c_of_s=4 * len(self.best),
            nodes_explored=self.nodes,
            optimal=optimal,
        )

    def _tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.budget_nodes:
            raise _OutOfBudget("node budget exhausted")
        if self.nodes % _CLOCK_STRIDE == 0 and time.monotonic() > self._deadline:
            raise _OutOfBudget("time budget exhausted")

    def _search(self, free: Set[int], stars: List[Star], edges: List[Edge], covered: int) -> None:
        self._tick()
        if covered > 4 * len(self.best):
            self.best = list(stars)
            if covered == self.ceiling:
                return
        if not free:
            return
        reds = sum(1 for p in free if self.s.color(p) is Color.RED)
        if covered + count_bound(reds, len(free) - reds) <= 4 * len(self.best):
            return

        p = min(free)
        color = self.s.color(p)
        others = sorted(free - {p})
        opposite = [q for q in others if self.s.color(q) is not color]
        same = [q for q in others if self.s.color(q) is color]

        for leaves in combinations(opposite, 3):
            self._place(Star(p, leaves), free, stars, edges, covered)  # type: ignore[arg-type]
            if 4 * len(self.best) == self.ceiling:
                return
        for center in opposite:
            for pair in combinations(same, 2):
                self._place(Star(center, tuple(sorted((p, *pair)))), free, stars, edges, covered)  # type: ignore[arg-type]
                if 4 * len(self.best) == self.ceiling:
                    return
        free.discard(p)
        self._search(free, stars, edges, covered)
        free.add(p)

    def _place(self, star: Star, free: Set[int], stars: List[Star], edges: List[Edge], covered: int) -> None:
        xy = self.s.xy
        new = [(xy(a), xy(b)) for a, b in star.edges()]
        for a, b in new:
            for u, v in edges:
                if proper_crossing(a, b, u, v):
                    return
        free.difference_update(star.points)
        stars.append(star)
        edges.extend(new)
        self._search(free, stars, edges, covered + 4)
        del edges[-3:]
        stars.pop()
        free.update(star.points)


class _OutOfBudget(Exception):
    pass


def exact_max_cover(
    s: PointSet, budget_nodes: Optional[int] = None, budget_secs: Optional[float] = None
) -> ExactResult:
    """
    A covering with the most covered points.

    Raises :class:`~starcover.errors.BudgetExceeded`, carrying the best
    covering found so far flagged non-optimal, when the budget runs out.
    """
    return ExactSearch(s, budget_nodes, budget_secs).run()
