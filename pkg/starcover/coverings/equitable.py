"""
Full coverings of {1,3}-equitable sets.
"""

import logging

from ..core.geometry import PointSet
from ..core.partition import equitable_subdivision
from ..errors import QuotaMismatch
from .base import Covering, star_of

logger = logging.getLogger(__name__)


def cover_equitable(s: PointSet) -> Covering:
    """
    Cover every point of an (3b, b)- or (r, 3r)-set.

    Splits the plane into convex regions holding three points of one color
    and one of the other, then takes one star per region.
    """
    if len(s) == 0:
        return Covering()
    if s.r == 3 * s.b:
        c, d, g = 3, 1, s.b
    elif s.b == 3 * s.r:
        c, d, g = 1, 3, s.r
    else:
        raise QuotaMismatch(f"({s.r}, {s.b}) is not {{1,3}}-equitable")
    regions = equitable_subdivision(s, c, d, g)
    stars = [star_of(s, region.members) for region in regions]
    logger.debug("Equitable cover of (%d, %d) with %d stars", s.r, s.b, len(stars))
    return Covering(stars=stars, uncovered=[])
