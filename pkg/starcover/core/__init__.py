"""
starcover - Core Module
Exact geometry, rotating-line searches and balanced subdivisions
"""

from .geometry import (
    Color,
    ColoredPoint,
    DirectedLine,
    PointSet,
    Segment,
    convex_hull,
    halfplane_census,
    is_convex_position,
    is_general_position,
    orientation,
    segments_properly_cross,
)
from .lines import (
    DirectionSweep,
    find_line_through_blue,
    find_line_with_counts,
    ham_sandwich,
    rotate_to_count,
)
from .partition import (
    ConvexRegion,
    SignTable,
    ThreeCut,
    TwoCut,
    build_sign_table,
    equitable_subdivision,
    find_equitable_2cut,
    find_equitable_3cut,
    subdivide_s_s1,
)

__all__ = [
    "Color",
    "ColoredPoint",
    "DirectedLine",
    "PointSet",
    "Segment",
    "convex_hull",
    "halfplane_census",
    "is_convex_position",
    "is_general_position",
    "orientation",
    "segments_properly_cross",
    "DirectionSweep",
    "find_line_through_blue",
    "find_line_with_counts",
    "ham_sandwich",
    "rotate_to_count",
    "ConvexRegion",
    "SignTable",
    "ThreeCut",
    "TwoCut",
    "build_sign_table",
    "equitable_subdivision",
    "find_equitable_2cut",
    "find_equitable_3cut",
    "subdivide_s_s1",
]
