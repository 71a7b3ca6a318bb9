"""
starcover - Coverings Module
Star-covering algorithms, their certified bounds and the auto dispatcher
"""

from .auto import choose_strategy, cover_auto
from .base import Certificate, Covering, DoubleChain, Star, star_of
from .bounds import bs_bound, eight_ninths_bound, general_t_params, separable_quota, upper_range_bound
from .convex import cover_convex_greedy, decide_convex_full, max_cover_convex
from .double_chain import cover_double_chain
from .driver import certified_bound, cover_driver
from .equitable import cover_equitable
from .general import cover_11_11, cover_general_t, cover_near_equitable, cover_nine
from .separable import cover_linearly_separable, is_linearly_separable

__all__ = [
    "Certificate",
    "Covering",
    "DoubleChain",
    "Star",
    "star_of",
    "bs_bound",
    "eight_ninths_bound",
    "general_t_params",
    "separable_quota",
    "upper_range_bound",
    "choose_strategy",
    "cover_auto",
    "cover_convex_greedy",
    "decide_convex_full",
    "max_cover_convex",
    "cover_double_chain",
    "certified_bound",
    "cover_driver",
    "cover_equitable",
    "cover_11_11",
    "cover_general_t",
    "cover_near_equitable",
    "cover_nine",
    "cover_linearly_separable",
    "is_linearly_separable",
]
