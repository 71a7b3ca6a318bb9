"""
Exact geometric kernel.

Coordinates are Python integers limited to ``|x|, |y| <= 2**30``; line anchors
may be :class:`fractions.Fraction`. Every predicate is a sign of an exact
determinant, so nothing in this module rounds.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import Enum, IntEnum
from fractions import Fraction
from math import gcd
from typing import Dict, Iterable, Iterator, List, NamedTuple, Optional, Sequence, Tuple, Union

from ..config import COORDINATE_LIMIT
from ..errors import CoordinateRangeError

logger = logging.getLogger(__name__)

Number = Union[int, Fraction]
Vector = Tuple[Number, Number]


class Color(str, Enum):
    """Point colors"""

    RED = "R"
    BLUE = "B"

    @property
    def other(self) -> "Color":
        return Color.BLUE if self is Color.RED else Color.RED


class Orientation(IntEnum):
    """Turn direction of an ordered point triple."""

    CW = -1
    COLLINEAR = 0
    CCW = 1


# ----------------------------------------------------------------------
# Vector arithmetic
# ----------------------------------------------------------------------
def sub(u: Vector, v: Vector) -> Vector:
    return (u[0] - v[0], u[1] - v[1])


def add(u: Vector, v: Vector) -> Vector:
    return (u[0] + v[0], u[1] + v[1])


def neg(u: Vector) -> Vector:
    return (-u[0], -u[1])


def cross(u: Vector, v: Vector) -> Number:
    return u[0] * v[1] - u[1] * v[0]


def dot(u: Vector, v: Vector) -> Number:
    return u[0] * v[0] + u[1] * v[1]


def sign(value: Number) -> int:
    return (value > 0) - (value < 0)


def signed_area2(p: Vector, q: Vector, r: Vector) -> Number:
    """Twice the signed area of triangle ``pqr`` (positive when CCW)."""
    return cross(sub(q, p), sub(r, p))


def orientation(p: Vector, q: Vector, r: Vector) -> Orientation:
    return Orientation(sign(signed_area2(p, q, r)))


def angle_key(v: Vector) -> Tuple[int, int, Fraction]:
    """Sort key increasing with the polar angle of ``v`` in ``[0, 2*pi)``."""
    x, y = v
    half = 0
    if not (y > 0 or (y == 0 and x > 0)):
        half, x, y = 1, -x, -y
    if y == 0:
        return (half, 0, Fraction(0))
    return (half, 1, Fraction(-x) / Fraction(y))


def strictly_between(u: Vector, v: Vector, w: Vector) -> bool:
    """True when ``v`` lies strictly inside the angle swept CCW from ``u`` to ``w`` (< pi)."""
    return cross(u, v) > 0 and cross(v, w) > 0


def point_in_cone(apex: Vector, first: Vector, last: Vector, p: Vector) -> bool:
    """True when ``p`` is strictly inside the cone at ``apex`` swept CCW from ``first`` to ``last``."""
    return strictly_between(sub(first, apex), sub(p, apex), sub(last, apex))


def primitive(v: Tuple[int, int]) -> Tuple[int, int]:
    """Divide an integer vector by the gcd of its components."""
    g = gcd(v[0], v[1])
    return (v[0] // g, v[1] // g) if g else v


# ----------------------------------------------------------------------
# Points
# ----------------------------------------------------------------------
@dataclass(frozen=True)
class ColoredPoint:
    """A colored point with exact integer coordinates."""

    id: int
    x: int
    y: int
    color: Color

    @property
    def xy(self) -> Tuple[int, int]:
        return (self.x, self.y)

    @property
    def is_red(self) -> bool:
        return self.color is Color.RED


@dataclass(frozen=True)
class PositionReport:
    """Outcome of a general-position check."""

    duplicates: List[Tuple[int, int]] = field(default_factory=list)
    collinear: List[Tuple[int, int, int]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.duplicates and not self.collinear


class PointSet:
    """
    Immutable bicolored point set.

    ``verified`` records whether general position was checked. Passing
    ``None`` runs the check; subsets of a verified set inherit the flag.
    """

    def __init__(self, points: Iterable[ColoredPoint], verified: Optional[bool] = None):
        self.points: Tuple[ColoredPoint, ...] = tuple(points)
        self._by_id: Dict[int, ColoredPoint] = {}
        for point in self.points:
            if point.id in self._by_id:
                raise ValueError(f"duplicate point id {point.id}")
            if abs(point.x) > COORDINATE_LIMIT or abs(point.y) > COORDINATE_LIMIT:
                raise CoordinateRangeError(
                    f"point {point.id} at ({point.x}, {point.y}) exceeds |coordinate| <= 2**30"
                )
            self._by_id[point.id] = point
        self.r = sum(1 for point in self.points if point.is_red)
        self.b = len(self.points) - self.r
        if verified is None:
            verified = is_general_position(self).ok
        self.general_position: bool = verified

    @classmethod
    def from_tuples(cls, rows: Iterable[Tuple[int, int, str]]) -> "PointSet":
        """Build a set from ``(x, y, "R"|"B")`` rows, numbering ids from 0."""
        return cls(ColoredPoint(i, x, y, Color(c)) for i, (x, y, c) in enumerate(rows))

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self) -> Iterator[ColoredPoint]:
        return iter(self.points)

    def __contains__(self, point_id: object) -> bool:
        return point_id in self._by_id

    def __repr__(self) -> str:
        return f"PointSet(r={self.r}, b={self.b})"

    def point(self, point_id: int) -> ColoredPoint:
        return self._by_id[point_id]

    def xy(self, point_id: int) -> Tuple[int, int]:
        return self._by_id[point_id].xy

    def color(self, point_id: int) -> Color:
        return self._by_id[point_id].color

    @property
    def ids(self) -> List[int]:
        return [point.id for point in self.points]

    def of_color(self, color: Color) -> List[ColoredPoint]:
        return [point for point in self.points if point.color is color]

    def count(self, color: Color) -> int:
        return self.r if color is Color.RED else self.b

    def subset(self, ids: Iterable[int]) -> "PointSet":
        """The restriction to ``ids``, keeping the original order and ids."""
        wanted = set(ids)
        return PointSet(
            (point for point in self.points if point.id in wanted),
            verified=self.general_position or None,
        )

    def without(self, ids: Iterable[int]) -> "PointSet":
        dropped = set(ids)
        return self.subset(point.id for point in self.points if point.id not in dropped)

    def recolor(self, point_id: int, color: Color) -> "PointSet":
        return PointSet(
            (
                ColoredPoint(p.id, p.x, p.y, color) if p.id == point_id else p
                for p in self.points
            ),
            verified=self.general_position,
        )

    def swap_colors(self) -> "PointSet":
        return PointSet(
            (ColoredPoint(p.id, p.x, p.y, p.color.other) for p in self.points),
            verified=self.general_position,
        )


def is_general_position(s: PointSet) -> PositionReport:
    """
    List every coincident pair and every collinear triple of ``s``.

    Directions from each pivot are reduced to a canonical primitive vector,
    so a repeated direction means a collinear triple through the pivot.
    """
    points = s.points
    duplicates: List[Tuple[int, int]] = []
    triples = set()
    for i, p in enumerate(points):
        buckets: Dict[Tuple[int, int], List[int]] = {}
        for q in points[i + 1 :]:
            dx, dy = q.x - p.x, q.y - p.y
            if dx == 0 and dy == 0:
                duplicates.append((p.id, q.id))
                continue
            direction = primitive((dx, dy))
            if direction[0] < 0 or (direction[0] == 0 and direction[1] < 0):
                direction = (-direction[0], -direction[1])
            buckets.setdefault(direction, []).append(q.id)
        for members in buckets.values():
            for a in range(len(members)):
                for b in range(a + 1, len(members)):
                    triples.add(tuple(sorted((p.id, members[a], members[b]))))
    return PositionReport(duplicates=duplicates, collinear=sorted(triples))


# ----------------------------------------------------------------------
# Segments and hulls
# ----------------------------------------------------------------------
@dataclass(frozen=True)
class Segment:
    """A segment between two point ids."""

    a: int
    b: int

    def __post_init__(self):
        if self.a == self.b:
            raise ValueError("segment endpoints must be distinct")


def proper_crossing(p1: Vector, p2: Vector, q1: Vector, q2: Vector) -> bool:
    """True when the open segments ``p1p2`` and ``q1q2`` intersect."""
    if p1 in (q1, q2) or p2 in (q1, q2):
        return False
    o1 = sign(signed_area2(p1, p2, q1))
    o2 = sign(signed_area2(p1, p2, q2))
    o3 = sign(signed_area2(q1, q2, p1))
    o4 = sign(signed_area2(q1, q2, p2))
    return o1 * o2 < 0 and o3 * o4 < 0


def segments_properly_cross(a: Segment, b: Segment, s: PointSet) -> bool:
    if {a.a, a.b} & {b.a, b.b}:
        return False
    return proper_crossing(s.xy(a.a), s.xy(a.b), s.xy(b.a), s.xy(b.b))


def convex_hull_points(points: Sequence[ColoredPoint]) -> List[int]:
    """Monotone chain; hull vertex ids in CCW order, strict turns only."""
    ordered = sorted(points, key=lambda p: (p.x, p.y))
    if len(ordered) <= 2:
        return [p.id for p in ordered]

    def half(chain: Iterable[ColoredPoint]) -> List[ColoredPoint]:
        out: List[ColoredPoint] = []
        for p in chain:
            while len(out) >= 2 and signed_area2(out[-2].xy, out[-1].xy, p.xy) <= 0:
                out.pop()
            out.append(p)
        return out

    lower = half(ordered)
    upper = half(reversed(ordered))
    return [p.id for p in lower[:-1] + upper[:-1]]


def convex_hull(s: PointSet) -> List[int]:
    return convex_hull_points(s.points)


def is_convex_position(s: PointSet) -> bool:
    return len(convex_hull(s)) == len(s)


# ----------------------------------------------------------------------
# Directed lines
# ----------------------------------------------------------------------
@dataclass(frozen=True)
class DirectedLine:
    """Line through ``anchor`` oriented along ``direction``; left is CCW of it."""

    anchor: Vector
    direction: Tuple[int, int]

    def __post_init__(self):
        if self.direction[0] == 0 and self.direction[1] == 0:
            raise ValueError("direction must be nonzero")

    @classmethod
    def through(cls, p: Vector, q: Vector) -> "DirectedLine":
        return cls(anchor=p, direction=(q[0] - p[0], q[1] - p[1]))

    def side(self, p: Vector) -> int:
        """+1 left, -1 right, 0 on the line."""
        return sign(cross(self.direction, sub(p, self.anchor)))

    def reversed(self) -> "DirectedLine":
        return DirectedLine(self.anchor, (-self.direction[0], -self.direction[1]))

    def parallel_through(self, p: Vector) -> "DirectedLine":
        return DirectedLine(p, self.direction)


class Census(NamedTuple):
    """Red and blue counts on both open sides of a line, plus on-line ids."""

    left_red: int
    left_blue: int
    right_red: int
    right_blue: int
    on_line: Tuple[int, ...]

    @property
    def left(self) -> int:
        return self.left_red + self.left_blue

    @property
    def right(self) -> int:
        return self.right_red + self.right_blue


def halfplane_census(line: DirectedLine, s: Iterable[ColoredPoint]) -> Census:
    counts = {(1, True): 0, (1, False): 0, (-1, True): 0, (-1, False): 0}
    on_line: List[int] = []
    for point in s:
        side = line.side(point.xy)
        if side == 0:
            on_line.append(point.id)
        else:
            counts[(side, point.is_red)] += 1
    return Census(
        counts[(1, True)], counts[(1, False)], counts[(-1, True)], counts[(-1, False)], tuple(on_line)
    )


def left_ids(line: DirectedLine, s: Iterable[ColoredPoint]) -> List[int]:
    return [point.id for point in s if line.side(point.xy) > 0]
