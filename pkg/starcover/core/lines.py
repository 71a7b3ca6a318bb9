"""
Rotating-line searches.

Every query here runs over the combinatorial direction classes of a point
set: the O(N^2) open arcs of directions between consecutive critical
directions (those parallel to some ``q - p``). Inside one class the order of
the points by signed distance to a line of that direction is fixed, so a
line with a prescribed left set exists iff some class has that set as a
prefix. :class:`DirectionSweep` walks all classes exactly, swapping one
adjacent pair per critical direction.
"""

from __future__ import annotations

import logging
from bisect import bisect_left
from fractions import Fraction
from typing import (
    Dict,
    FrozenSet,
    Iterable,
    Iterator,
    List,
    Mapping,
    Optional,
    Sequence,
    Set,
    Tuple,
)

from ..errors import InvalidQuery, PreconditionUnmet
from .geometry import (
    ColoredPoint,
    DirectedLine,
    PointSet,
    Vector,
    add,
    angle_key,
    cross,
    neg,
    primitive,
    sub,
)

logger = logging.getLogger(__name__)

Target = Tuple[int, int]


def between(u: Tuple[int, int], w: Tuple[int, int]) -> Tuple[int, int]:
    """A direction strictly inside the CCW arc from ``u`` to ``w``."""
    c = cross(u, w)
    if c > 0:
        return add(u, w)  # type: ignore[return-value]
    if c < 0:
        return neg(add(u, w))  # type: ignore[return-value]
    return (-u[1], u[0])


def _midpoint(a: Vector, b: Vector) -> Vector:
    def half(value) -> Fraction | int:
        f = Fraction(value) / 2
        return int(f) if f.denominator == 1 else f

    return (half(a[0] + b[0]), half(a[1] + b[1]))


def prefix_line(order: Sequence[ColoredPoint], direction: Tuple[int, int], t: int) -> DirectedLine:
    """
    Point-free line of ``direction`` whose left side is ``order[:t]``.

    ``order`` must be sorted by strictly decreasing ``cross(direction, p)``.
    """
    perp = (-direction[1], direction[0])
    if not order:
        return DirectedLine((0, 0), direction)
    if t == 0:
        return DirectedLine(add(order[0].xy, perp), direction)
    if t == len(order):
        return DirectedLine(sub(order[-1].xy, perp), direction)
    return DirectedLine(_midpoint(order[t - 1].xy, order[t].xy), direction)


def order_along(points: Iterable[ColoredPoint], direction: Tuple[int, int]) -> List[ColoredPoint]:
    """Points sorted from the far left of ``direction`` to the far right."""
    return sorted(points, key=lambda p: cross(direction, p.xy), reverse=True)


class SweepState:
    """
    Order and weighted prefix counts for one direction class.

    The sweep mutates and re-yields a single instance; copy what you keep.
    """

    __slots__ = (
        "direction",
        "order",
        "position",
        "red_prefix",
        "blue_prefix",
        "weight_prefix",
        "changed",
    )

    def __init__(self, direction: Tuple[int, int], order: List[ColoredPoint], weights: Mapping[int, int]):
        self.direction = direction
        self.order = order
        self.position: Dict[int, int] = {p.id: i for i, p in enumerate(order)}
        self.red_prefix = [0]
        self.blue_prefix = [0]
        self.weight_prefix = [0]
        #: Prefix sizes whose left set changed in the last event; ``None`` on the first class.
        self.changed: Optional[List[int]] = None
        for p in order:
            w = weights.get(p.id, 1)
            self.red_prefix.append(self.red_prefix[-1] + (w if p.is_red else 0))
            self.blue_prefix.append(self.blue_prefix[-1] + (0 if p.is_red else w))
            self.weight_prefix.append(self.weight_prefix[-1] + w)

    def left_ids(self, t: int) -> List[int]:
        return [p.id for p in self.order[:t]]

    def line_for_prefix(self, t: int) -> DirectedLine:
        return prefix_line(self.order, self.direction, t)

    def line_through(self, index: int) -> DirectedLine:
        """Line through ``order[index]`` with ``order[:index]`` strictly left."""
        return DirectedLine(self.order[index].xy, self.direction)


class DirectionSweep:
    """Exact rotating sweep over every direction class of ``points``."""

    def __init__(self, points: Iterable[ColoredPoint], weights: Optional[Mapping[int, int]] = None):
        self.points: List[ColoredPoint] = list(points)
        self.weights: Mapping[int, int] = weights or {}
        events: Dict[Tuple[int, int], List[Tuple[int, int]]] = {}
        for i, p in enumerate(self.points):
            for q in self.points[i + 1 :]:
                v = primitive(sub(q.xy, p.xy))  # type: ignore[arg-type]
                events.setdefault(v, []).append((p.id, q.id))
                events.setdefault(neg(v), []).append((p.id, q.id))  # type: ignore[arg-type]
        self._events = events
        self._directions = sorted(events, key=angle_key)

    def __len__(self) -> int:
        return max(1, len(self._directions))

    def __iter__(self) -> Iterator[SweepState]:
        dirs = self._directions
        start = between(dirs[-1], dirs[0]) if dirs else (1, 0)
        state = SweepState(start, order_along(self.points, start), self.weights)
        yield state
        for k in range(len(dirs) - 1):
            state.changed = []
            for a, b in self._events[dirs[k]]:
                state.changed.append(self._swap(state, a, b))
            state.direction = between(dirs[k], dirs[k + 1])
            yield state

    def _swap(self, state: SweepState, a: int, b: int) -> int:
        i, j = state.position[a], state.position[b]
        lo = min(i, j)
        if abs(i - j) != 1:
            raise ValueError("direction sweep requires points in general position")
        order = state.order
        order[lo], order[lo + 1] = order[lo + 1], order[lo]
        state.position[order[lo].id] = lo
        state.position[order[lo + 1].id] = lo + 1
        p = order[lo]
        w = self.weights.get(p.id, 1)
        state.red_prefix[lo + 1] = state.red_prefix[lo] + (w if p.is_red else 0)
        state.blue_prefix[lo + 1] = state.blue_prefix[lo] + (0 if p.is_red else w)
        state.weight_prefix[lo + 1] = state.weight_prefix[lo] + w
        return lo + 1


# ----------------------------------------------------------------------
# Lines with prescribed left counts
# ----------------------------------------------------------------------
def _check_query(s: PointSet, m: int, j: int) -> None:
    if not 0 <= m <= len(s):
        raise InvalidQuery(f"m={m} outside [0, {len(s)}]")
    if not 0 <= j <= min(m, s.b):
        raise InvalidQuery(f"j={j} outside [0, {min(m, s.b)}]")


def find_lines_for_targets(s: PointSet, targets: Iterable[Target]) -> Dict[Target, DirectedLine]:
    """
    One sweep answering many ``(m, j)`` queries at once.

    Returns a point-free line for every target that is achievable; targets
    missing from the result have no line in any direction.
    """
    wanted: Dict[int, Set[int]] = {}
    remaining = 0
    for m, j in set(targets):
        _check_query(s, m, j)
        wanted.setdefault(m, set()).add(j)
        remaining += 1
    found: Dict[Target, DirectedLine] = {}
    if not remaining:
        return found
    for state in DirectionSweep(s.points):
        boundaries = list(wanted) if state.changed is None else state.changed
        for m in boundaries:
            blues = wanted.get(m)
            if blues and state.blue_prefix[m] in blues:
                j = state.blue_prefix[m]
                found[(m, j)] = state.line_for_prefix(m)
                blues.discard(j)
                remaining -= 1
        if not remaining:
            break
    return found


def find_line_with_counts(s: PointSet, m: int, j: int) -> Optional[DirectedLine]:
    """A point-free line with ``m`` points and ``j`` blue points strictly left, or ``None``."""
    return find_lines_for_targets(s, [(m, j)]).get((m, j))


def find_line_through_blue(s: PointSet, m: int, j: int) -> Optional[Tuple[DirectedLine, int]]:
    """
    A line through exactly one blue point ``y`` with ``m - 1`` points, ``j`` of
    them blue, strictly left. Returns ``(line, y)`` or ``None``.
    """
    if s.b == 0 or not 1 <= m <= len(s):
        raise InvalidQuery(f"m={m} needs a blue point and 1 <= m <= {len(s)}")
    if not 0 <= j <= min(m - 1, s.b - 1):
        raise InvalidQuery(f"j={j} outside [0, {min(m - 1, s.b - 1)}]")
    for state in DirectionSweep(s.points):
        y = state.order[m - 1]
        if not y.is_red and state.blue_prefix[m - 1] == j:
            return state.line_through(m - 1), y.id
    return None


def rotate_to_count(s: PointSet, x: int, m: int) -> DirectedLine:
    """A line through ``x`` and no other point with exactly ``m`` points strictly left."""
    if x not in s:
        raise InvalidQuery(f"point {x} is not in the set")
    if 0 <= m < len(s):
        for state in DirectionSweep(s.points):
            if state.position[x] == m:
                return state.line_through(m)
    raise PreconditionUnmet(f"no line through {x} has {m} points on its left")


def opposite_lines(
    s: PointSet, m: int, direction: Tuple[int, int]
) -> Tuple[DirectedLine, DirectedLine, List[int]]:
    """
    Two parallel lines of opposite directions, each with ``m`` points left.

    ``direction`` must order the points strictly. Returns both lines and the
    ids strictly right of both.
    """
    order = order_along(s.points, direction)
    n = len(order)
    if 2 * m > n:
        raise InvalidQuery(f"two disjoint left sides of {m} points need {2 * m} points")
    first = prefix_line(order, direction, m)
    backward = list(reversed(order))
    second = prefix_line(backward, (-direction[0], -direction[1]), m)
    return first, second, [p.id for p in order[m : n - m]]


def enumerate_left_sets(s: PointSet) -> Set[FrozenSet[int]]:
    """
    Brute-force left sets of all point-free lines.

    Each line through two points ``p, q`` is nudged into its four adjacent
    classes, which together reach every realizable left set.
    """
    points = list(s.points)
    result: Set[FrozenSet[int]] = {frozenset(), frozenset(p.id for p in points)}
    for p in points:
        for q in points:
            if p.id == q.id:
                continue
            line = DirectedLine.through(p.xy, q.xy)
            left = frozenset(r.id for r in points if line.side(r.xy) > 0)
            result.update((left, left | {p.id}, left | {q.id}, left | {p.id, q.id}))
    return result


# ----------------------------------------------------------------------
# Ham-sandwich cuts
# ----------------------------------------------------------------------
def _weighted_sides(
    line: DirectedLine, s: PointSet, weights: Mapping[int, int]
) -> Tuple[int, int, int, int, List[int]]:
    lr = lb = rr = rb = 0
    on_line: List[int] = []
    for p in s:
        side = line.side(p.xy)
        w = weights.get(p.id, 1)
        if side == 0:
            on_line.append(p.id)
        elif side > 0:
            lr, lb = (lr + w, lb) if p.is_red else (lr, lb + w)
        else:
            rr, rb = (rr + w, rb) if p.is_red else (rr, rb + w)
    return lr, lb, rr, rb, on_line


def is_bisector(line: DirectedLine, s: PointSet, weights: Optional[Mapping[int, int]] = None) -> bool:
    """At most half of each color's weight strictly on either side."""
    weights = weights or {}
    total_r = sum(weights.get(p.id, 1) for p in s if p.is_red)
    total_b = sum(weights.get(p.id, 1) for p in s if not p.is_red)
    lr, lb, rr, rb, _ = _weighted_sides(line, s, weights)
    return max(lr, rr) <= total_r // 2 and max(lb, rb) <= total_b // 2


def ham_sandwich(s: PointSet, weights: Optional[Mapping[int, int]] = None) -> DirectedLine:
    """
    A line bisecting both colors, counting each point with its weight.

    Even/even totals give a point-free line when one exists. One odd total
    gives a line through a single point of that color. Odd/odd totals give a
    line through one red and one blue point.
    """
    weights = dict(weights or {})
    if s.r == 0 or s.b == 0:
        raise InvalidQuery("ham_sandwich needs at least one point of each color")
    total_r = sum(weights.get(p.id, 1) for p in s if p.is_red)
    total_b = sum(weights.get(p.id, 1) for p in s if not p.is_red)
    line = None
    if total_r % 2 == 0 and total_b % 2 == 0:
        line = _point_free_bisector(s, weights, total_r // 2, total_b // 2)
    elif total_r % 2 != total_b % 2:
        line = _single_point_bisector(s, weights, total_r, total_b)
    if line is None:
        line = _pair_bisector(s, weights, odd_odd=total_r % 2 == 1 and total_b % 2 == 1)
    if line is None or not is_bisector(line, s, weights):
        raise PreconditionUnmet("no bisector found; is the set in general position?")
    logger.debug("Ham-sandwich line %s for (%d, %d)", line, total_r, total_b)
    return line


def _point_free_bisector(
    s: PointSet, weights: Mapping[int, int], half_r: int, half_b: int
) -> Optional[DirectedLine]:
    half = half_r + half_b
    for state in DirectionSweep(s.points, weights):
        t = bisect_left(state.weight_prefix, half)
        if t < len(state.weight_prefix) and state.weight_prefix[t] == half:
            if state.red_prefix[t] == half_r:
                return state.line_for_prefix(t)
    return None


def _single_point_bisector(
    s: PointSet, weights: Mapping[int, int], total_r: int, total_b: int
) -> Optional[DirectedLine]:
    odd_red = total_r % 2 == 1
    for state in DirectionSweep(s.points, weights):
        for t, p in enumerate(state.order):
            if p.is_red != odd_red:
                continue
            if weights.get(p.id, 1) != 1:
                continue
            lr, lb = state.red_prefix[t], state.blue_prefix[t]
            rr = total_r - state.red_prefix[t + 1]
            rb = total_b - state.blue_prefix[t + 1]
            if max(lr, rr) <= total_r // 2 and max(lb, rb) <= total_b // 2:
                return state.line_through(t)
    return None


def _pair_bisector(s: PointSet, weights: Mapping[int, int], odd_odd: bool) -> Optional[DirectedLine]:
    points = list(s.points)
    for i, p in enumerate(points):
        for q in points[i + 1 :]:
            if odd_odd and p.is_red == q.is_red:
                continue
            for line in (DirectedLine.through(p.xy, q.xy), DirectedLine.through(q.xy, p.xy)):
                if is_bisector(line, s, weights):
                    return line
    return None
