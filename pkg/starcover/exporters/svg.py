"""
SVG Exporter
Draws point sets with coverings, cuttings and regions on a square canvas
"""

import logging
from pathlib import Path
from typing import List, Optional, Sequence, Set, Tuple

from ..config import settings
from ..core.geometry import DirectedLine, PointSet
from ..core.partition import ConvexRegion, Cutting, ThreeCut, TwoCut
from ..coverings.base import Covering

logger = logging.getLogger(__name__)

SVG_HEADER = """<?xml version="1.0" encoding="UTF-8" standalone="no"?>
<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{size}" height="{size}" viewBox="0 0 {size} {size}">
<rect x="0" y="0" width="{size}" height="{size}" fill="white"/>
"""
SVG_FOOTER = "</svg>\n"

FILL = {"R": "#d62728", "B": "#1f77b4"}


class SvgCanvas:
    """
    World-to-viewport mapping plus element emitters.

    The y axis is flipped so the picture matches the usual orientation.
    Numbers are printed with two decimals, which keeps output byte-stable.
    """

    def __init__(self, bounds: Tuple[float, float, float, float], size: int, margin: int):
        self.size = size
        self.margin = margin
        min_x, min_y, max_x, max_y = bounds
        span = max(max_x - min_x, max_y - min_y, 1)
        self.scale = (size - 2 * margin) / span
        self.min_x, self.min_y = min_x, min_y
        self.span = span
        self.lines: List[str] = []

    def window(self, x: float, y: float) -> Tuple[float, float]:
        return (
            self.margin + (x - self.min_x) * self.scale,
            self.size - self.margin - (y - self.min_y) * self.scale,
        )

    def line(self, a: Tuple[float, float], b: Tuple[float, float], color: str = "black", width: float = 1.5, dashed: bool = False) -> None:
        (x1, y1), (x2, y2) = self.window(*a), self.window(*b)
        dash = ' stroke-dasharray="8,6"' if dashed else ""
        self.lines.append(
            f'<line x1="{x1:.2f}" y1="{y1:.2f}" x2="{x2:.2f}" y2="{y2:.2f}" '
            f'stroke="{color}" stroke-width="{width:.2f}"{dash}/>'
        )

    def dot(self, p: Tuple[float, float], color: str, radius: float, hollow: bool = False) -> None:
        x, y = self.window(*p)
        if hollow:
            style = f'fill="white" stroke="{color}" stroke-width="2.00"'
        else:
            style = f'fill="{color}" stroke="black" stroke-width="0.50"'
        self.lines.append(f'<circle cx="{x:.2f}" cy="{y:.2f}" r="{radius:.2f}" {style}/>')

    def directed_line(self, line: DirectedLine, color: str = "gray") -> None:
        ax, ay = float(line.anchor[0]), float(line.anchor[1])
        dx, dy = line.direction
        norm = (dx * dx + dy * dy) ** 0.5
        reach = 4 * self.span / norm
        self.line((ax - dx * reach, ay - dy * reach), (ax + dx * reach, ay + dy * reach), color, 1.0, dashed=True)

    def ray(self, apex: Tuple[float, float], direction: Tuple[int, int], color: str = "gray") -> None:
        dx, dy = direction
        norm = (dx * dx + dy * dy) ** 0.5
        reach = 4 * self.span / norm
        self.line(apex, (apex[0] + dx * reach, apex[1] + dy * reach), color, 1.0, dashed=True)

    def render(self) -> str:
        return SVG_HEADER.format(size=self.size) + "".join(f"{line}\n" for line in self.lines) + SVG_FOOTER


def _bounds(s: PointSet) -> Tuple[float, float, float, float]:
    if not len(s):
        return (0.0, 0.0, 1.0, 1.0)
    xs = [p.x for p in s]
    ys = [p.y for p in s]
    return (min(xs), min(ys), max(xs), max(ys))


def render_svg(
    s: PointSet,
    covering: Optional[Covering] = None,
    cutting: Optional[Cutting] = None,
    regions: Optional[Sequence[ConvexRegion]] = None,
    size: Optional[int] = None,
) -> str:
    """
    SVG text for ``s`` with any combination of overlays.

    Cut and region boundaries are dashed, star edges solid black, covered
    points filled and uncovered points hollow.
    """
    canvas = SvgCanvas(_bounds(s), size or settings.svg_size, settings.svg_margin)

    if regions:
        drawn: Set[Tuple[object, ...]] = set()
        for region in regions:
            for h in region.halfplanes:
                key = _line_key(h)
                if key not in drawn:
                    drawn.add(key)
                    canvas.directed_line(h, "#7f7f7f")
    if isinstance(cutting, TwoCut):
        canvas.directed_line(cutting.line, "#2ca02c")
    elif isinstance(cutting, ThreeCut):
        apex = (float(cutting.apex[0]), float(cutting.apex[1]))
        for ray in cutting.rays:
            canvas.ray(apex, ray, "#2ca02c")

    hollow: Set[int] = set()
    if covering is not None:
        for star in covering.stars:
            for center, leaf in star.edges():
                canvas.line(s.xy(center), s.xy(leaf))
        hollow = set(covering.uncovered)

    for p in s:
        canvas.dot(p.xy, FILL[p.color.value], settings.svg_point_radius, hollow=p.id in hollow)
    return canvas.render()


def _line_key(line: DirectedLine) -> Tuple[object, ...]:
    dx, dy = line.direction
    # a halfplane and its complement share one boundary
    if (dx, dy) < (0, 0):
        dx, dy = -dx, -dy
    return (line.anchor, dx, dy)


def write_svg(text: str, path: Path) -> None:
    Path(path).write_text(text)
    logger.debug("Wrote SVG to %s", path)
