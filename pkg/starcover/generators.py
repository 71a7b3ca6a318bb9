"""
Point-set generators.

Everything is emitted in exact integer coordinates and checked for general
position before it is returned. Random families are deterministic per seed
through :func:`numpy.random.default_rng`.
"""

from __future__ import annotations

import logging
import math
from pathlib import Path
from typing import List, Optional, Sequence, Tuple

import numpy as np

from .config import settings
from .core.geometry import (
    Color,
    ColoredPoint,
    PointSet,
    convex_hull,
    primitive,
    signed_area2,
)
from .coverings.base import DoubleChain
from .errors import ConstructionFailed, ConvexityFailed, ExhaustedRetries, NotDoubleChain
from .models import DoubleChainDocument, PointSetDocument

logger = logging.getLogger(__name__)

XY = Tuple[int, int]


# ----------------------------------------------------------------------
# Random families
# ----------------------------------------------------------------------
class _GeneralPositionSampler:
    """Adds points one at a time, rejecting any that would be collinear with two others."""

    def __init__(self) -> None:
        self.points: List[XY] = []

    def fits(self, c: XY) -> bool:
        seen = set()
        for p in self.points:
            dx, dy = p[0] - c[0], p[1] - c[1]
            if dx == 0 and dy == 0:
                return False
            d = primitive((dx, dy))
            if d[0] < 0 or (d[0] == 0 and d[1] < 0):
                d = (-d[0], -d[1])
            if d in seen:
                return False
            seen.add(d)
        return True

    def add(self, c: XY) -> bool:
        if self.fits(c):
            self.points.append(c)
            return True
        return False


def _sample(
    rng: np.random.Generator,
    sampler: _GeneralPositionSampler,
    count: int,
    x_range: Tuple[int, int],
    y_range: Tuple[int, int],
) -> None:
    retries = settings.max_generator_retries
    for _ in range(count):
        for _ in range(retries):
            c = (int(rng.integers(x_range[0], x_range[1] + 1)), int(rng.integers(y_range[0], y_range[1] + 1)))
            if sampler.add(c):
                break
        else:
            raise ExhaustedRetries(
                f"no general-position point found in {retries} tries; enlarge the bounding box"
            )


def _build(coords: Sequence[XY], colors: Sequence[Color]) -> PointSet:
    s = PointSet(ColoredPoint(i, x, y, c) for i, ((x, y), c) in enumerate(zip(coords, colors)))
    if not s.general_position:
        raise ConstructionFailed("generated set is not in general position")
    return s


def gen_random(r: int, b: int, seed: int = 0, bbox: Optional[int] = None) -> PointSet:
    """
    ``r`` red and ``b`` blue points with coordinates in ``[-bbox, bbox]``.

    Reds get ids ``0..r-1`` and blues the rest.
    """
    if r < 0 or b < 0:
        raise ValueError("color counts must be non-negative")
    bbox = settings.generator_radius if bbox is None else bbox
    if bbox < 4 * (r + b):
        raise ExhaustedRetries(f"bbox {bbox} is below 4 * (r + b) = {4 * (r + b)}")
    rng = np.random.default_rng(seed)
    sampler = _GeneralPositionSampler()
    _sample(rng, sampler, r + b, (-bbox, bbox), (-bbox, bbox))
    return _build(sampler.points, [Color.RED] * r + [Color.BLUE] * b)


def gen_separable(r: int, b: int, seed: int = 0, bbox: Optional[int] = None) -> PointSet:
    """Reds with ``x < 0`` and blues with ``x > 0``; the y-axis separates them."""
    bbox = settings.generator_radius if bbox is None else bbox
    if bbox < 4 * (r + b):
        raise ExhaustedRetries(f"bbox {bbox} is below 4 * (r + b) = {4 * (r + b)}")
    rng = np.random.default_rng(seed)
    sampler = _GeneralPositionSampler()
    _sample(rng, sampler, r, (-bbox, -1), (-bbox, bbox))
    _sample(rng, sampler, b, (1, bbox), (-bbox, bbox))
    return _build(sampler.points, [Color.RED] * r + [Color.BLUE] * b)


def gen_general_t(k: int, t: int, seed: int = 0, bbox: Optional[int] = None) -> PointSet:
    """A random (3k - t, k + 2t)-set."""
    if 3 * k < t or t < 0:
        raise ValueError(f"(k, t) = ({k}, {t}) gives a negative red count")
    return gen_random(3 * k - t, k + 2 * t, seed, bbox)


def random_pattern(r: int, b: int, seed: int = 0) -> str:
    """A shuffled color string with ``r`` R's and ``b`` B's."""
    rng = np.random.default_rng(seed)
    letters = np.array(list("R" * r + "B" * b))
    rng.shuffle(letters)
    return "".join(letters.tolist())


# ----------------------------------------------------------------------
# Convex position
# ----------------------------------------------------------------------
def _circle(n: int, radius: int, phase: float = 0.0) -> List[XY]:
    angles = phase + 2 * np.pi * np.arange(n) / n
    xs = np.rint(radius * np.cos(angles)).astype(np.int64)
    ys = np.rint(radius * np.sin(angles)).astype(np.int64)
    return [(int(x), int(y)) for x, y in zip(xs, ys)]


def _parse_colors(pattern: str) -> List[Color]:
    try:
        return [Color(ch) for ch in pattern.upper()]
    except ValueError as exc:
        raise ValueError(f"pattern {pattern!r} may only contain R and B") from exc


def gen_convex(pattern: str, radius: Optional[int] = None) -> PointSet:
    """
    Points on a circle colored by ``pattern`` in CCW order, ids following the pattern.

    The radius doubles until the rounded positions are in convex and general
    position.
    """
    if not pattern:
        raise ValueError("pattern must be non-empty")
    colors = _parse_colors(pattern)
    radius = radius or settings.generator_radius
    for _ in range(settings.max_generator_retries):
        coords = _circle(len(colors), radius)
        s = PointSet(ColoredPoint(i, x, y, c) for i, ((x, y), c) in enumerate(zip(coords, colors)))
        if s.general_position and _in_ccw_order(s):
            return s
        logger.warning("Circle of radius %d not convex for %d points, doubling", radius, len(colors))
        radius *= 2
        if radius * 4 > settings.coordinate_limit:
            break
    raise ConvexityFailed(f"no convex placement for {len(colors)} points")


def _in_ccw_order(s: PointSet) -> bool:
    hull = convex_hull(s)
    if len(hull) != len(s):
        return False
    start = hull.index(0)
    return hull[start:] + hull[:start] == list(range(len(s)))


# ----------------------------------------------------------------------
# Double chains
# ----------------------------------------------------------------------
def gen_double_chain(colors1: str, colors2: str, seed: int = 0) -> DoubleChain:
    """
    ``chain1`` on a downward parabola under ``chain2`` on an upward one.

    ``chain1`` runs right to left and ``chain2`` left to right, which is CCW
    along each hull. The gap between the parabolas doubles until every
    cross segment clears both hulls.
    """
    if not colors1 or not colors2:
        raise ValueError("both chains must be non-empty")
    first, second = _parse_colors(colors1), _parse_colors(colors2)
    rng = np.random.default_rng(seed)
    width = 2 * (len(first) + len(second)) + 8
    gap = 4 * width * width + 1
    for _ in range(settings.max_generator_retries):
        xs1 = sorted(rng.choice(np.arange(-width, width + 1), size=len(first), replace=False).tolist(), reverse=True)
        xs2 = sorted(rng.choice(np.arange(-width, width + 1), size=len(second), replace=False).tolist())
        coords = [(int(x), -int(x) * int(x)) for x in xs1] + [(int(x), gap + int(x) * int(x)) for x in xs2]
        s = PointSet(
            ColoredPoint(i, x, y, c) for i, ((x, y), c) in enumerate(zip(coords, first + second))
        )
        if not s.general_position:
            continue
        dc = DoubleChain(s, tuple(range(len(first))), tuple(range(len(first), len(s))))
        try:
            dc.validate()
        except NotDoubleChain as exc:
            logger.warning("Double chain rejected (%s), widening the gap", exc)
            gap *= 2
            continue
        return dc
    raise ConstructionFailed(f"no valid double chain for {colors1!r} / {colors2!r}")


# ----------------------------------------------------------------------
# Lower-bound constructions
# ----------------------------------------------------------------------
def splitting_diagonals(s: PointSet, polygon: Sequence[int], cluster: Sequence[int]) -> List[Tuple[int, int]]:
    """Bichromatic polygon diagonals with cluster points strictly on both sides (or on them)."""
    found = []
    for i, a in enumerate(polygon):
        for c in polygon[i + 1 :]:
            if s.color(a) is s.color(c):
                continue
            sides = {
                (signed_area2(s.xy(a), s.xy(c), s.xy(q)) > 0) - (signed_area2(s.xy(a), s.xy(c), s.xy(q)) < 0)
                for q in cluster
            }
            if len(sides) > 1 or 0 in sides:
                found.append((a, c))
    return found


def _alternating_polygon(n: int, radius: int, phase: float) -> Tuple[List[XY], List[Color]]:
    coords = _circle(n, radius, phase)
    colors = [Color.RED if i % 2 == 0 else Color.BLUE for i in range(n)]
    return coords, colors


def gen_fig4(r: int, b: int) -> PointSet:
    """
    A color-alternating convex 2b-gon plus ``r - b`` red points near a line
    through the midpoints of two antipodal sides, clustered so that no
    bichromatic diagonal separates them.
    """
    if not b < r < 3 * b:
        raise ValueError(f"need b < r < 3b, got ({r}, {b})")
    n, extra = 2 * b, r - b
    radius = settings.generator_radius
    polygon, colors = _alternating_polygon(n, radius, 0.0)
    # the line through the midpoints of sides (n-1, 0) and (b-1, b)
    angle = -math.pi / n
    u = (math.cos(angle), math.sin(angle))
    normal = (-u[1], u[0])
    for offset in (0.0, 0.01, -0.01, 0.03, -0.03, 0.1, -0.1, 0.2, -0.2):
        for step in (radius // 2000, radius // 20000, radius // 200000, 2):
            base = (offset * radius * u[0], offset * radius * u[1])
            cluster = []
            for i in range(extra):
                along = (i - (extra - 1) / 2) * step
                bend = i * i
                cluster.append(
                    (
                        int(round(base[0] + along * u[0] + bend * normal[0])),
                        int(round(base[1] + along * u[1] + bend * normal[1])),
                    )
                )
            coords = polygon + cluster
            s = PointSet(
                ColoredPoint(i, x, y, c)
                for i, ((x, y), c) in enumerate(zip(coords, colors + [Color.RED] * extra))
            )
            if not s.general_position:
                continue
            if not splitting_diagonals(s, list(range(n)), list(range(n, n + extra))):
                logger.debug("fig4 (%d, %d): cluster offset %.2f step %d", r, b, offset, step)
                return s
    raise ConstructionFailed(f"every cluster placement for ({r}, {b}) is split by a diagonal")


def gen_fig5(k: int) -> PointSet:
    """A color-alternating convex 4k-gon plus one red point next to its center."""
    if k < 1:
        raise ValueError("k must be at least 1")
    n = 4 * k
    polygon, colors = _alternating_polygon(n, settings.generator_radius, math.pi / (7 * n))
    for dx, dy in ((1, 0), (0, 1), (1, 2), (2, 1), (3, 1), (1, 3), (3, 2), (2, 3)):
        s = PointSet(
            ColoredPoint(i, x, y, c)
            for i, ((x, y), c) in enumerate(zip(polygon + [(dx, dy)], colors + [Color.RED]))
        )
        if s.general_position:
            return s
    raise ConstructionFailed(f"no central point in general position for k={k}")


# ----------------------------------------------------------------------
# Files
# ----------------------------------------------------------------------
def write_point_set(s: PointSet, path: Path) -> None:
    Path(path).write_text(PointSetDocument.from_point_set(s).model_dump_json(indent=2))


def read_point_set(path: Path) -> PointSet:
    return PointSetDocument.model_validate_json(Path(path).read_text()).to_point_set()


def write_double_chain(dc: DoubleChain, path: Path) -> None:
    Path(path).write_text(DoubleChainDocument.from_double_chain(dc).model_dump_json(indent=2))


def read_double_chain(path: Path) -> DoubleChain:
    return DoubleChainDocument.model_validate_json(Path(path).read_text()).to_double_chain()

