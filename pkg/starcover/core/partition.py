"""
Balanced subdivision engine.

Splits a bicolored set into convex regions with prescribed red/blue counts:
equitable 2-cuttings (one line), equitable 3-cuttings (three rays from an
apex), the sign tables over canonical vertical lines that certify which
cutting exists, and the recursive subdivisions built from them.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb, lcm
from typing import Callable, Dict, Iterable, Iterator, List, Optional, Sequence, Tuple, Union

import numpy as np

from ..config import settings
from ..errors import (
    DegenerateX,
    InvalidQuery,
    QuotaMismatch,
    SearchExhausted,
    ZeroSignFound,
)
from .geometry import (
    Color,
    ColoredPoint,
    DirectedLine,
    PointSet,
    Vector,
    angle_key,
    cross,
    dot,
    halfplane_census,
    neg,
    primitive,
    sign,
)
from .lines import DirectionSweep, between, find_line_with_counts, find_lines_for_targets

logger = logging.getLogger(__name__)

Couple = Tuple[int, int]
Quota = Tuple[int, int]


# ----------------------------------------------------------------------
# Regions and cuttings
# ----------------------------------------------------------------------
@dataclass(frozen=True)
class ConvexRegion:
    """
    Intersection of the open left sides of ``halfplanes``.

    ``quota`` is the declared (red, blue) count, ``None`` when unknown.
    """

    halfplanes: Tuple[DirectedLine, ...]
    members: Tuple[int, ...]
    kind: str = "X"
    quota: Optional[Quota] = None

    def contains(self, p: Vector) -> bool:
        return all(h.side(p) > 0 for h in self.halfplanes)


@dataclass(frozen=True)
class TwoCut:
    """A single line; ``quota_index`` names the requested quota on its left."""

    line: DirectedLine
    quota_index: Optional[int] = None

    def sides(self) -> List[Tuple[DirectedLine, ...]]:
        return [(self.line,), (self.line.reversed(),)]

    def wedge_census(self, s: Iterable[ColoredPoint]) -> List[Quota]:
        census = halfplane_census(self.line, s)
        return [(census.left_red, census.left_blue), (census.right_red, census.right_blue)]


@dataclass(frozen=True)
class ThreeCut:
    """
    Three rays from ``apex`` in CCW order; wedge ``k`` runs from ``rays[k]``
    to ``rays[k + 1]`` and holds quota ``assignment[k]``.
    """

    apex: Vector
    rays: Tuple[Tuple[int, int], Tuple[int, int], Tuple[int, int]]
    assignment: Tuple[int, int, int] = (0, 1, 2)

    def wedge(self, k: int) -> Tuple[DirectedLine, DirectedLine]:
        nxt = self.rays[(k + 1) % 3]
        return (DirectedLine(self.apex, self.rays[k]), DirectedLine(self.apex, neg(nxt)))  # type: ignore[arg-type]

    def sides(self) -> List[Tuple[DirectedLine, ...]]:
        return [self.wedge(k) for k in range(3)]

    def wedge_census(self, s: Iterable[ColoredPoint]) -> List[Quota]:
        """Red and blue counts per wedge; points on a ray are not counted."""
        counts = [[0, 0], [0, 0], [0, 0]]
        for p in s:
            for k in range(3):
                first, second = self.wedge(k)
                if first.side(p.xy) > 0 and second.side(p.xy) > 0:
                    counts[k][0 if p.is_red else 1] += 1
                    break
        return [(red, blue) for red, blue in counts]


Cutting = Union[TwoCut, ThreeCut]


def split_members(s: PointSet, sides: Sequence[Tuple[DirectedLine, ...]]) -> List[List[int]]:
    parts: List[List[int]] = [[] for _ in sides]
    for p in s:
        for index, halfplanes in enumerate(sides):
            if all(h.side(p.xy) > 0 for h in halfplanes):
                parts[index].append(p.id)
                break
    return parts


# ----------------------------------------------------------------------
# Sign tables
# ----------------------------------------------------------------------
def shear_factor(s: PointSet) -> int:
    """0 when x-coordinates are distinct, else a factor making ``x + K*y`` distinct."""
    xs = [p.x for p in s]
    if len(set(xs)) == len(xs):
        return 0
    bound = max((max(abs(p.x), abs(p.y)) for p in s), default=0)
    return 1 + 2 * bound


@dataclass(frozen=True)
class SignTable:
    """
    Blue counts left of the canonical vertical lines.

    ``blue_left[i]`` counts blues left of the line just right of the ``i``-th
    red in sheared x order; index 0 is the line just left of the first red.
    """

    shear: int
    red_keys: Tuple[int, ...]
    blue_left: Tuple[int, ...]

    @property
    def r(self) -> int:
        return len(self.red_keys)

    @property
    def counts(self) -> List[int]:
        return list(self.blue_left[1:])

    def line(self, i: int) -> DirectedLine:
        """The vertical line with exactly ``i`` reds on its left."""
        if not self.red_keys:
            raise InvalidQuery("sign table has no red points")
        if i == 0:
            c = Fraction(2 * self.red_keys[0] - 1, 2)
        else:
            c = Fraction(2 * self.red_keys[i - 1] + 1, 2)
        direction = (-self.shear, 1) if self.shear else (0, 1)
        return DirectedLine((c, 0), direction)

    def sign(self, i: int, j: int) -> int:
        return sign(self.blue_left[i] - j)

    def sg(self, g: int, h: int, s: int) -> int:
        """Sign for ``g`` regions of (s+1, s) and ``h`` of (s, s+1) on the left."""
        return self.sign((s + 1) * g + s * h, s * g + (s + 1) * h)

    def exchange_violation(self, g: int, h: int, s: int) -> Optional[Couple]:
        """A couple breaking ``sg(a, b) < 0 => sg(a - 1, b + 1) < 0``, else ``None``."""
        for a in range(1, g + 1):
            for b in range(h):
                if self.sg(a, b, s) < 0 and self.sg(a - 1, b + 1, s) >= 0:
                    return (a, b)
        return None


def build_sign_table(s: PointSet) -> SignTable:
    k = shear_factor(s)
    keyed = sorted((p.x + k * p.y, p) for p in s)
    keys = [key for key, _ in keyed]
    if len(set(keys)) != len(keys):
        raise DegenerateX(f"shear {k} leaves equal x-coordinates")
    red_keys: List[int] = []
    blue_left: List[int] = []
    blues = 0
    for key, p in keyed:
        if not p.is_red:
            blues += 1
            continue
        if not red_keys:
            blue_left.append(blues)
        red_keys.append(key)
        blue_left.append(blues)
    if not red_keys:
        blue_left.append(blues)
    return SignTable(shear=k, red_keys=tuple(red_keys), blue_left=tuple(blue_left))


# ----------------------------------------------------------------------
# Equitable 2-cuttings
# ----------------------------------------------------------------------
def find_equitable_2cut(s: PointSet, r1: int, b1: int) -> Optional[DirectedLine]:
    """A line with exactly ``r1`` reds and ``b1`` blues strictly left, or ``None``."""
    if not (0 <= r1 <= s.r and 0 <= b1 <= s.b):
        raise InvalidQuery(f"quota ({r1}, {b1}) outside ({s.r}, {s.b})")
    if s.r:
        table = build_sign_table(s)
        if table.blue_left[r1] == b1:
            return table.line(r1)
    return find_line_with_counts(s, r1 + b1, b1)


def find_equitable_2cuts(s: PointSet) -> Dict[Quota, DirectedLine]:
    """Every ``(red, blue)`` left count realized by some point-free line."""
    found: Dict[Quota, DirectedLine] = {}
    for state in DirectionSweep(s.points):
        for t in range(len(s) + 1):
            key = (t - state.blue_prefix[t], state.blue_prefix[t])
            if key not in found:
                found[key] = state.line_for_prefix(t)
    return found


# ----------------------------------------------------------------------
# Equitable 3-cuttings
# ----------------------------------------------------------------------
_PI_KEY = angle_key((-1, 0))


def _rel(ref: Tuple[int, int], v: Tuple[int, int]):
    """Angle key of ``v`` measured CCW from ``ref``."""
    return angle_key((dot(ref, v), cross(ref, v)))


def _later(ref, a, b):
    return a if _rel(ref, a) >= _rel(ref, b) else b


def _earlier(ref, a, b):
    return a if _rel(ref, a) <= _rel(ref, b) else b


def _rays_for_blocks(first: Sequence[Tuple[int, int]], last: Sequence[Tuple[int, int]]):
    """
    Rays separating three CCW blocks of directions into wedges under pi.

    ``first[i]`` and ``last[i]`` are the extreme directions of block ``i``.
    Returns three ray directions or ``None`` when the blocks do not fit.
    """
    e1, e2, e3 = first
    f1, f2, f3 = last
    lower = primitive(neg(f1)) if _rel(f3, f1) > _PI_KEY else f3
    upper = _earlier(f3, e1, neg(e3))
    if not _rel(f3, lower) < _rel(f3, upper):
        return None
    theta1 = primitive(between(lower, upper))

    lower = primitive(neg(f2)) if _rel(f1, f2) > _PI_KEY else f1
    upper = _earlier(f1, e2, neg(theta1))
    if not _rel(f1, lower) < _rel(f1, upper):
        return None
    theta2 = primitive(between(lower, upper))

    lower = primitive(neg(theta1)) if _rel(f2, theta1) > _PI_KEY else f2
    upper = _earlier(f2, e3, neg(theta2))
    if not _rel(f2, lower) < _rel(f2, upper):
        return None
    theta3 = primitive(between(lower, upper))
    return (theta1, theta2, theta3)


def _apex_candidates(s: PointSet) -> Iterator[Tuple[Fraction, Fraction]]:
    points = list(s.points)
    n = len(points)
    rng = np.random.default_rng(settings.cut_seed)
    yield (Fraction(sum(p.x for p in points), n), Fraction(sum(p.y for p in points), n))
    for color in (Color.RED, Color.BLUE):
        group = s.of_color(color)
        if group:
            yield (
                Fraction(sum(p.x for p in group), len(group)),
                Fraction(sum(p.y for p in group), len(group)),
            )
    if comb(n, 3) <= settings.cut_apex_triple_limit:
        triples: Iterable[Tuple[ColoredPoint, ...]] = combinations(points, 3)
    else:
        picks = rng.integers(0, n, size=(settings.cut_apex_triple_limit, 3))
        triples = (tuple(points[int(i)] for i in row) for row in picks if len(set(row)) == 3)
    for a, b, c in triples:
        yield (Fraction(a.x + b.x + c.x, 3), Fraction(a.y + b.y + c.y, 3))

    if settings.cut_apex_random_trials:
        logger.warning("3-cut centroid candidates exhausted, sampling random apexes")
    xs = [p.x for p in points]
    ys = [p.y for p in points]
    den = 7
    for _ in range(settings.cut_apex_random_trials):
        x = int(rng.integers(min(xs) * den, max(xs) * den + 1))
        y = int(rng.integers(min(ys) * den, max(ys) * den + 1))
        yield (Fraction(x, den), Fraction(y, den))


def _cut_at_apex(
    points: Sequence[ColoredPoint], apex: Tuple[Fraction, Fraction], quotas: Sequence[Quota]
) -> Optional[ThreeCut]:
    den = lcm(apex[0].denominator, apex[1].denominator)
    ax, ay = int(apex[0] * den), int(apex[1] * den)
    vectors = []
    for p in points:
        v = (p.x * den - ax, p.y * den - ay)
        if v == (0, 0):
            return None
        vectors.append((angle_key(v), v, p))
    vectors.sort(key=lambda item: item[0])
    n = len(vectors)
    for i in range(n):
        if vectors[i][0] == vectors[(i + 1) % n][0]:
            return None
    dirs = [v for _, v, _ in vectors]
    reds = [0]
    for _ in range(2):
        for _, _, p in vectors:
            reds.append(reds[-1] + (1 if p.is_red else 0))

    for order in ((0, 1, 2), (0, 2, 1)):
        sizes = [sum(quotas[q]) for q in order]
        for k in range(n):
            start = k
            blocks = []
            for q, size in zip(order, sizes):
                if reds[start + size] - reds[start] != quotas[q][0]:
                    break
                blocks.append((start, start + size - 1))
                start += size
            else:
                firsts = [dirs[a % n] for a, _ in blocks]
                lasts = [dirs[b % n] for _, b in blocks]
                if any(cross(f, l) <= 0 and f != l for f, l in zip(firsts, lasts)):
                    continue
                rays = _rays_for_blocks(firsts, lasts)
                if rays is None:
                    continue
                cut = ThreeCut(apex=apex, rays=rays, assignment=order)
                census = cut.wedge_census(points)
                if all(census[w] == tuple(quotas[order[w]]) for w in range(3)):
                    return cut
    return None


def find_equitable_3cut(s: PointSet, quotas: Sequence[Quota]) -> Cutting:
    """
    An equitable 3-cutting for three ``(red, blue)`` quotas.

    Returns a :class:`TwoCut` when one quota can be cut off by a single line,
    otherwise a :class:`ThreeCut` whose wedges hold the quotas exactly.
    """
    quotas = [tuple(q) for q in quotas]
    if len(quotas) != 3:
        raise InvalidQuery("a 3-cutting needs exactly three quotas")
    if sum(q[0] for q in quotas) != s.r or sum(q[1] for q in quotas) != s.b:
        raise InvalidQuery(f"quotas {quotas} do not sum to ({s.r}, {s.b})")
    if any(q[0] < 0 or q[1] < 0 for q in quotas):
        raise InvalidQuery(f"quotas {quotas} must be non-negative")

    candidates = [i for i, q in enumerate(quotas) if sum(q) > 0]
    targets = {(sum(quotas[i]), quotas[i][1]): i for i in candidates}
    lines = find_lines_for_targets(s, targets)
    for target, index in targets.items():
        if target in lines:
            logger.debug("Quota %s cut off by a single line", quotas[index])
            return TwoCut(lines[target], quota_index=index)
    if len(candidates) < 3:
        raise SearchExhausted(
            "no line realizes a degenerate 3-cut", {"quotas": quotas, "n": len(s)}
        )

    points = list(s.points)
    tried = 0
    for apex in _apex_candidates(s):
        tried += 1
        cut = _cut_at_apex(points, apex, quotas)
        if cut is not None:
            logger.debug("3-cut found at apex %s after %d candidates", apex, tried)
            return cut
    raise SearchExhausted(
        f"no equitable 3-cutting for quotas {quotas}",
        {"quotas": quotas, "apexes_tried": tried, "n": len(s)},
    )


# ----------------------------------------------------------------------
# Couple selection
# ----------------------------------------------------------------------
def _balanced(parts: Sequence[Couple], g: int, h: int) -> bool:
    limit_g = max(1, 2 * g // 3)
    limit_h = max(1, 2 * h // 3)
    fits_g = all(part[0] <= limit_g for part in parts)
    fits_h = all(part[1] <= limit_h for part in parts)
    if h == 0:
        return fits_g
    if g == 0:
        return fits_h
    return fits_g or fits_h


def _spread(parts: Sequence[Couple]) -> int:
    return max(a + b for a, b in parts)


@dataclass(frozen=True)
class Couples:
    """Two or three couples with equal sign; ``zero_sign`` marks a vertical 2-cut."""

    parts: Tuple[Couple, ...]
    zero_sign: bool = False


def choose_couples_cd(table: Union[SignTable, PointSet], c: int, d: int, g: int) -> Couples:
    """
    Group counts for an equitable split of ``g`` regions of ``c`` red and ``d`` blue.

    Returns two couples when a 2-cutting exists (equal halves, a zero sign,
    or two equal signs) and three equal-sign couples otherwise, each at most
    ``floor(2g/3)``.
    """
    if isinstance(table, PointSet):
        table = build_sign_table(table)
    if g < 2:
        raise InvalidQuery("couple selection needs g >= 2")
    if g % 2 == 0:
        return Couples(((g // 2, 0), (g // 2, 0)))

    def sig(x: int) -> int:
        return table.sign(c * x, d * x)

    limit = max(1, 2 * g // 3)
    by_balance = sorted(range(1, g), key=lambda x: max(x, g - x))
    for x in by_balance:
        if max(x, g - x) <= limit and sig(x) == 0:
            return Couples(((x, 0), (g - x, 0)), zero_sign=True)
    for x in by_balance:
        if max(x, g - x) <= limit and sig(x) == sig(g - x):
            return Couples(((x, 0), (g - x, 0)))
    triples = [
        (a, b, g - a - b)
        for a in range(1, g)
        for b in range(a, g)
        if g - a - b >= b and max(a, b, g - a - b) <= limit
    ]
    triples.sort(key=max)
    for a, b, rest in triples:
        if sig(a) == sig(b) == sig(rest) != 0:
            return Couples(((a, 0), (b, 0), (rest, 0)))
    raise SearchExhausted(f"no equal-sign couples for c={c}, d={d}, g={g}", {"g": g})


def _gh_candidates(g: int, h: int) -> Iterator[Tuple[Couple, ...]]:
    """Couple families in the order the exchange argument visits them."""
    i, j = g // 2, h // 2
    if g % 2 and h % 2:
        yield ((i + 1, j), (i, j + 1))
        yield ((0, 1), (i, j), (i + 1, j))
        yield ((1, 0), (i, j), (i, j + 1))
    elif g % 2:
        yield ((i, j), (i + 1, j))
        yield ((1, 0), (i, j), (i, j))
    else:
        yield ((i, j), (i, j + 1))
        yield ((0, 1), (i, j), (i, j))
    # sign changes along the rows y = 0, j and j + 1
    for y in sorted({0, j, j + 1} & set(range(h + 1))):
        for k in range(g):
            yield ((k + 1, y), (g - k - 1, h - y))
            yield ((1, 0), (k, y), (g - k - 1, h - y))
            if y < h:
                yield ((0, 1), (k, y), (g - k, h - y - 1))
    thirds_g = (g // 3, (g + 1) // 3, (g + 2) // 3)
    thirds_h = ((h + 2) // 3, (h + 1) // 3, h // 3)
    yield tuple(zip(thirds_g, thirds_h))
    for i1 in range(1, g // 3 + 1):
        rest = g - i1
        yield ((i1, 0), (rest // 2, j), (rest - rest // 2, h - j))
    for j1 in range(1, h // 3 + 1):
        rest = h - j1
        yield ((0, j1), (i, rest // 2), (g - i, rest - rest // 2))


def _acceptable(parts: Sequence[Couple], g: int, h: int, sg: Callable[[Couple], int]) -> bool:
    if any(a < 0 or b < 0 or (a, b) == (0, 0) for a, b in parts):
        return False
    if (sum(a for a, _ in parts), sum(b for _, b in parts)) != (g, h):
        return False
    signs = {sg(c) for c in parts}
    return len(signs) == 1 and 0 not in signs and _balanced(parts, g, h)


def choose_couples_gh(table: SignTable, s: int, g: int, h: int) -> Tuple[Couple, ...]:
    """
    Two or three couples ``(g_i, h_i)`` summing to ``(g, h)`` with equal sign.

    Every couple respects ``g_i <= floor(2g/3)`` for all ``i`` or
    ``h_i <= floor(2h/3)`` for all ``i``. A zero sign among the balanced
    couples is reported through :class:`ZeroSignFound`. Candidates follow
    the central couples, then the sign changes along three rows, then even
    thirds and thin-slab triples; a plain scan only runs when all of those fail.
    """
    if g < 2 or h < 2:
        raise InvalidQuery("couple selection needs g, h >= 2")
    bad = table.exchange_violation(g, h, s)
    if bad is not None:
        raise InvalidQuery(f"sign table breaks the exchange property at {bad} for s={s}")
    if g % 2 == 0 and h % 2 == 0:
        return ((g // 2, h // 2), (g // 2, h // 2))

    def sg(couple: Couple) -> int:
        return table.sg(couple[0], couple[1], s)

    couples = [
        (a, b)
        for a in range(g + 1)
        for b in range(h + 1)
        if 0 < a + b < g + h
    ]
    pairs = sorted(
        (c for c in couples if _balanced([c, (g - c[0], h - c[1])], g, h)),
        key=lambda c: _spread([c, (g - c[0], h - c[1])]),
    )
    for c in pairs:
        if sg(c) == 0:
            raise ZeroSignFound(c)
    for parts in _gh_candidates(g, h):
        if _acceptable(parts, g, h, sg):
            return parts
    for c in pairs:
        rest = (g - c[0], h - c[1])
        if sg(c) == sg(rest):
            return (c, rest)
    logger.warning("No structured couples for s=%d, g=%d, h=%d, scanning all triples", s, g, h)
    for i, c1 in enumerate(couples):
        for c2 in couples[i:]:
            parts = (c1, c2, (g - c1[0] - c2[0], h - c1[1] - c2[1]))
            if _acceptable(parts, g, h, sg):
                return parts
    raise SearchExhausted(f"no equal-sign couples for s={s}, g={g}, h={h}", {"g": g, "h": h})


# ----------------------------------------------------------------------
# Recursive subdivision
# ----------------------------------------------------------------------
class SubdivisionEngine:
    """
    Recursive subdivision into ``g`` regions of ``unit_x`` and ``h`` of ``unit_y``.

    Each step cuts off a balanced 2-cutting when one exists, else follows the
    couple choosers into a 3-cutting. ``max_depth`` records the deepest level
    reached by the last :meth:`run`.
    """

    def __init__(self, unit_x: Quota, unit_y: Optional[Quota] = None, star: Optional[int] = None):
        self.unit_x = unit_x
        self.unit_y = unit_y
        self.star = star
        self.max_depth = 0

    def unit(self, kind: str) -> Quota:
        return self.unit_x if kind == "X" else self.unit_y  # type: ignore[return-value]

    def quota(self, couple: Couple) -> Quota:
        g, h = couple
        yr, yb = self.unit_y or (0, 0)
        return (g * self.unit_x[0] + h * yr, g * self.unit_x[1] + h * yb)

    def run(self, s: PointSet, g: int, h: int = 0) -> List[ConvexRegion]:
        if (s.r, s.b) != self.quota((g, h)):
            raise QuotaMismatch(f"({s.r}, {s.b}) does not match {g} x {self.unit_x} + {h} x {self.unit_y}")
        self.max_depth = 0
        return self._subdivide(s, g, h, (), 0)

    def _subdivide(
        self, s: PointSet, g: int, h: int, halfplanes: Tuple[DirectedLine, ...], depth: int
    ) -> List[ConvexRegion]:
        self.max_depth = max(self.max_depth, depth)
        if g + h == 0:
            return []
        if g + h == 1:
            kind = "X" if g else "Y"
            return [ConvexRegion(halfplanes, tuple(sorted(s.ids)), kind, self.unit(kind))]
        if self.unit_y is not None and g and h and min(g, h) == 1:
            return self._recolor(s, g, h, halfplanes, depth)

        couples, cut = self._cut(s, g, h)
        regions: List[ConvexRegion] = []
        parts = split_members(s, cut.sides())
        for couple, ids, sides in zip(couples, parts, cut.sides()):
            regions.extend(
                self._subdivide(s.subset(ids), couple[0], couple[1], halfplanes + sides, depth + 1)
            )
        return regions

    def _recolor(
        self, s: PointSet, g: int, h: int, halfplanes: Tuple[DirectedLine, ...], depth: int
    ) -> List[ConvexRegion]:
        """One odd region out: recolor a point so all regions share one kind."""
        if h == 1:
            flipped = min(p.id for p in s.of_color(Color.BLUE))
            recolored = s.recolor(flipped, Color.RED)
            inner = SubdivisionEngine(self.unit_x)
            groups, odd_kind, kind = g + 1, "Y", "X"
        else:
            flipped = min(p.id for p in s.of_color(Color.RED))
            recolored = s.recolor(flipped, Color.BLUE)
            inner = SubdivisionEngine(self.unit_y)  # type: ignore[arg-type]
            groups, odd_kind, kind = h + 1, "X", "Y"
        logger.debug("Recolored point %d to reduce (%d, %d) to one kind", flipped, g, h)
        inner.max_depth = depth
        regions = inner._subdivide(recolored, groups, 0, halfplanes, depth)
        self.max_depth = max(self.max_depth, inner.max_depth)
        kinds = [odd_kind if flipped in r.members else kind for r in regions]
        return [
            ConvexRegion(r.halfplanes, r.members, k, self.unit(k)) for r, k in zip(regions, kinds)
        ]

    def _cut(self, s: PointSet, g: int, h: int) -> Tuple[List[Couple], Cutting]:
        total = (g, h)
        couples = [(a, b) for a in range(g + 1) for b in range(h + 1) if 0 < a + b < g + h]

        def complement(c: Couple) -> Couple:
            return (total[0] - c[0], total[1] - c[1])

        def target(c: Couple) -> Tuple[int, int]:
            red, blue = self.quota(c)
            return (red + blue, blue)

        balanced = [c for c in couples if _balanced([c, complement(c)], g, h)]
        lines = find_lines_for_targets(s, {target(c) for c in balanced})
        options = sorted(
            (c for c in balanced if target(c) in lines), key=lambda c: _spread([c, complement(c)])
        )
        if options:
            c = options[0]
            logger.debug("2-cut %s | %s on %d points", c, complement(c), len(s))
            return [c, complement(c)], TwoCut(lines[target(c)])

        try:
            chosen = self._choose(s, g, h)
        except ZeroSignFound as found:
            c = found.couple
            table = build_sign_table(s)
            logger.debug("Zero sign at %s, vertical 2-cut", c)
            return [c, complement(c)], TwoCut(table.line(self.quota(c)[0]))
        except SearchExhausted:
            chosen = ()

        if len(chosen) == 2:
            line = find_line_with_counts(s, *target(chosen[0]))
            if line is not None:
                return [chosen[0], chosen[1]], TwoCut(line)
        elif len(chosen) == 3:
            try:
                cut = find_equitable_3cut(s, [self.quota(c) for c in chosen])
            except SearchExhausted as exc:
                logger.warning("3-cut search failed for %s: %s", chosen, exc.diagnostics)
            else:
                if isinstance(cut, TwoCut):
                    c = chosen[cut.quota_index or 0]
                    return [c, complement(c)], cut
                logger.debug("3-cut %s on %d points", chosen, len(s))
                return [chosen[i] for i in cut.assignment], cut

        lines = find_lines_for_targets(s, {target(c) for c in couples})
        options = sorted(
            (c for c in couples if target(c) in lines), key=lambda c: _spread([c, complement(c)])
        )
        if options:
            c = options[0]
            logger.warning("Falling back to unbalanced 2-cut %s | %s", c, complement(c))
            return [c, complement(c)], TwoCut(lines[target(c)])
        raise SearchExhausted(
            f"no cutting for g={g}, h={h} on {len(s)} points", {"g": g, "h": h, "n": len(s)}
        )

    def _choose(self, s: PointSet, g: int, h: int) -> Tuple[Couple, ...]:
        table = build_sign_table(s)
        if h == 0 or g == 0:
            unit = self.unit_x if h == 0 else self.unit_y
            groups = g or h
            chosen = choose_couples_cd(table, unit[0], unit[1], groups)  # type: ignore[index]
            parts = tuple((x, 0) if h == 0 else (0, x) for x, _ in chosen.parts)
            if chosen.zero_sign:
                raise ZeroSignFound(parts[0])
            return parts
        return choose_couples_gh(table, self.star or 1, g, h)


def equitable_subdivision(s: PointSet, c: int, d: int, g: int) -> List[ConvexRegion]:
    """``g`` convex regions, each holding exactly ``c`` red and ``d`` blue points."""
    if (s.r, s.b) != (c * g, d * g):
        raise QuotaMismatch(f"({s.r}, {s.b}) is not {g} x ({c}, {d})")
    return SubdivisionEngine((c, d)).run(s, g)


def subdivide_s_s1(s: PointSet, star: int, g: int, h: int) -> List[ConvexRegion]:
    """``g`` regions of kind X with (star+1, star) and ``h`` of kind Y with (star, star+1)."""
    if star < 1 or g < 0 or h < 0 or g + h < 1:
        raise InvalidQuery("need star >= 1, g, h >= 0 and g + h >= 1")
    engine = SubdivisionEngine((star + 1, star), (star, star + 1), star=star)
    return engine.run(s, g, h)


def verify_subdivision(s: PointSet, regions: Sequence[ConvexRegion]) -> List[str]:
    """Problems found in ``regions``: membership, coverage and census mismatches."""
    problems: List[str] = []
    seen: Dict[int, int] = {}
    for index, region in enumerate(regions):
        for member in region.members:
            if member in seen:
                problems.append(f"point {member} in regions {seen[member]} and {index}")
            seen[member] = index
            if not region.contains(s.xy(member)):
                problems.append(f"point {member} not strictly inside region {index}")
        for p in s:
            if p.id not in region.members and region.contains(p.xy):
                problems.append(f"point {p.id} inside region {index} but not a member")
        if region.quota is not None and region_census(s, region) != tuple(region.quota):
            problems.append(
                f"region {index} holds {region_census(s, region)}, declared {tuple(region.quota)}"
            )
    missing = set(s.ids) - set(seen)
    if missing:
        problems.append(f"points {sorted(missing)} in no region")
    return problems


def region_census(s: PointSet, region: ConvexRegion) -> Quota:
    reds = sum(1 for m in region.members if s.color(m) is Color.RED)
    return (reds, len(region.members) - reds)
