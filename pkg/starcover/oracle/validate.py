"""
Covering validation.

Independent of every coverer: it re-checks star color patterns, point reuse,
partition completeness and pairwise proper crossings of all star edges.
"""

import logging
from enum import Enum
from itertools import combinations
from typing import Any, Dict, List, Tuple

from pydantic import BaseModel, Field

from ..core.geometry import PointSet, proper_crossing
from ..coverings.base import Covering

logger = logging.getLogger(__name__)


class ViolationKind(str, Enum):
    """Ways a covering can be invalid"""

    COLOR_PATTERN = "ColorPattern"
    REUSE = "Reuse"
    CROSSING = "Crossing"
    UNKNOWN_ID = "UnknownId"
    INCOMPLETE = "Incomplete"


class Violation(BaseModel):
    kind: ViolationKind
    details: Dict[str, Any] = Field(default_factory=dict)


class ValidationReport(BaseModel):
    """``ok`` is true exactly when ``violations`` is empty."""

    violations: List[Violation] = Field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def kinds(self) -> List[ViolationKind]:
        return [v.kind for v in self.violations]


def validate_covering(s: PointSet, c: Covering) -> ValidationReport:
    violations: List[Violation] = []
    usage: Dict[int, int] = {}

    def use(point_id: int, where: str) -> None:
        if point_id not in s:
            violations.append(Violation(kind=ViolationKind.UNKNOWN_ID, details={"id": point_id, "in": where}))
            return
        usage[point_id] = usage.get(point_id, 0) + 1

    for index, star in enumerate(c.stars):
        for point_id in star.points:
            use(point_id, f"star {index}")
        if all(p in s for p in star.points) and not star.colors_ok(s):
            violations.append(
                Violation(kind=ViolationKind.COLOR_PATTERN, details={"star": index, "center": star.center})
            )
    for point_id in c.uncovered:
        use(point_id, "uncovered")

    for point_id, count in sorted(usage.items()):
        if count > 1:
            violations.append(Violation(kind=ViolationKind.REUSE, details={"id": point_id, "count": count}))
    missing = sorted(set(s.ids) - set(usage))
    if missing:
        violations.append(Violation(kind=ViolationKind.INCOMPLETE, details={"missing": missing}))

    edges: List[Tuple[int, int, int]] = [
        (index, center, leaf)
        for index, star in enumerate(c.stars)
        for center, leaf in star.edges()
        if center in s and leaf in s
    ]
    for (i, a, b), (j, u, v) in combinations(edges, 2):
        if proper_crossing(s.xy(a), s.xy(b), s.xy(u), s.xy(v)):
            violations.append(
                Violation(
                    kind=ViolationKind.CROSSING,
                    details={"stars": [i, j], "edges": [[a, b], [u, v]]},
                )
            )

    report = ValidationReport(violations=violations)
    if not report.ok:
        logger.debug("Covering has %d violations", len(violations))
    return report
