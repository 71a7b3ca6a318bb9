"""
Strategy selection for ``cover --strategy auto``.
"""

import logging
from typing import Tuple

from ..config import settings
from ..core.geometry import PointSet, is_convex_position
from .base import Covering, quota_gh
from .convex import cover_convex_greedy, max_cover_convex
from .driver import cover_driver
from .equitable import cover_equitable
from .separable import cover_linearly_separable, is_linearly_separable

logger = logging.getLogger(__name__)


def choose_strategy(s: PointSet) -> str:
    """Name of the first specialist that applies to ``s``, else ``driver``."""
    if len(s) and (s.r == 3 * s.b or s.b == 3 * s.r):
        return "equitable"
    fits_quota = quota_gh(s.r, s.b) is not None
    if fits_quota and s.r and s.b and is_linearly_separable(s) is not None:
        return "separable"
    if len(s) >= 4 and is_convex_position(s):
        if len(s) <= settings.convex_dp_max_points:
            return "convex-dp"
        if fits_quota:
            return "convex-greedy"
    return "driver"


def cover_auto(s: PointSet) -> Tuple[str, Covering]:
    """Run the strategy :func:`choose_strategy` picks; returns its name and the covering."""
    strategy = choose_strategy(s)
    logger.info("Auto strategy for (%d, %d): %s", s.r, s.b, strategy)
    if strategy == "equitable":
        return strategy, cover_equitable(s)
    if strategy == "separable":
        return strategy, cover_linearly_separable(s)
    if strategy == "convex-dp":
        return strategy, max_cover_convex(s)
    if strategy == "convex-greedy":
        return strategy, cover_convex_greedy(s)
    return strategy, cover_driver(s)
