"""
Recursive coverings of (3k - t, k + 2t)-sets leaving at most t points uncovered.

The divide step depends on the parities of k and t:

- both even: a ham-sandwich line halves the instance;
- t even, k odd: a line with a prescribed left count, or two opposite
  parallel lines fencing off a (1,3) middle strip;
- t odd, k even: one line with a prescribed left count;
- both odd: a line with a prescribed left count, or one through a blue point.

``t == 0`` is the equitable base case, ``(k, t) == (1, 1)`` is the (2,3)-set
and ``k == ceil(5t/8) - 1`` is reduced to an equitable set by dropping a few
blue points. Also home to the two fixed-size specialists for (5,4)-sets and
(11,11)-sets.
"""

import logging
from typing import Iterable, List, Optional, Sequence, Tuple

from ..core.geometry import Color, DirectedLine, PointSet, halfplane_census
from ..core.lines import (
    DirectionSweep,
    find_line_through_blue,
    find_line_with_counts,
    find_lines_for_targets,
    ham_sandwich,
    opposite_lines,
)
from ..errors import PreconditionUnmet, QuotaMismatch, RangeError, UnreachableCase
from .base import Covering, Star, remove_extreme, star_of
from .bounds import admissible, general_t_floor, general_t_params
from .equitable import cover_equitable

logger = logging.getLogger(__name__)

Part = Tuple[int, int]


def _counts(k: int, t: int) -> Tuple[int, int]:
    return 3 * k - t, k + 2 * t


def _left_right(s: PointSet, line: DirectedLine) -> Tuple[List[int], List[int]]:
    left = [p.id for p in s if line.side(p.xy) > 0]
    right = [p.id for p in s if line.side(p.xy) < 0]
    return left, right


# ----------------------------------------------------------------------
# Entry point
# ----------------------------------------------------------------------
def cover_general_t(s: PointSet) -> Covering:
    """
    Cover all but at most t points of a (3k - t, k + 2t)-set.

    A set that only fits the pattern after swapping colors is covered through
    the swapped copy; ids are unchanged so the covering applies as is.
    """
    params = general_t_params(s.r, s.b)
    if params is None:
        swapped = general_t_params(s.b, s.r)
        if swapped is None:
            raise QuotaMismatch(f"({s.r}, {s.b}) is not (3k - t, k + 2t) in either color order")
        logger.debug("Covering (%d, %d) through its color swap", s.r, s.b)
        return _cover(s.swap_colors(), *swapped)
    return _cover(s, *params)


def _cover(s: PointSet, k: int, t: int) -> Covering:
    if not admissible(k, t):
        raise RangeError(f"k={k} is below the supported floor {general_t_floor(t)} for t={t}")
    if len(s) == 0:
        return Covering()
    if t == 0:
        return cover_equitable(s)
    if (k, t) == (1, 1):
        return _cover_two_three(s)
    if 8 * k < 5 * t:
        return cover_near_equitable(s)

    if k % 2 == 0 and t % 2 == 0:
        covering = _case_both_even(s, k, t)
    elif t % 2 == 0:
        covering = _case_t_even(s, k, t)
    elif k % 2 == 0:
        covering = _case_t_odd(s, k, t)
    else:
        covering = _case_both_odd(s, k, t)
    if covering is None:
        logger.error("k=%d, t=%d: no parity split on %d points", k, t, len(s))
        raise UnreachableCase("no parity split applies", {"k": k, "t": t, "n": len(s)})
    if len(covering.uncovered) > t:
        raise UnreachableCase(
            "recursive cover left too many points", {"k": k, "t": t, "left": len(covering.uncovered)}
        )
    return covering


def _cover_part(s: PointSet, ids: Iterable[int], part: Part) -> Covering:
    sub = s.subset(ids)
    if (sub.r, sub.b) != _counts(*part):
        raise UnreachableCase(
            "split produced the wrong counts", {"expected": _counts(*part), "got": (sub.r, sub.b)}
        )
    return _cover(sub, *part)


def _both_admissible(*parts: Part) -> bool:
    return all(admissible(*part) for part in parts)


# ----------------------------------------------------------------------
# Base cases
# ----------------------------------------------------------------------
def _cover_two_three(s: PointSet) -> Covering:
    """Any red point with the three blues; the other red stays uncovered."""
    reds = sorted(p.id for p in s.of_color(Color.RED))
    blues = sorted(p.id for p in s.of_color(Color.BLUE))
    star = Star(reds[0], tuple(blues))  # type: ignore[arg-type]
    return Covering(stars=[star], uncovered=reds[1:])


def cover_near_equitable(s: PointSet) -> Covering:
    """
    Drop the ``b - 3r`` surplus blues (at most eight) and cover the
    remaining (r, 3r)-set completely.
    """
    surplus = s.b - 3 * s.r
    if not 0 <= surplus <= 8:
        raise QuotaMismatch(f"({s.r}, {s.b}) needs {surplus} blue removals, outside [0, 8]")
    rest, removed = remove_extreme(s, Color.BLUE, surplus)
    logger.debug("Reduced (%d, %d) to an equitable set by removing %s", s.r, s.b, removed)
    return Covering.merge([cover_equitable(rest)], removed)


# ----------------------------------------------------------------------
# Parity cases
# ----------------------------------------------------------------------
def _split_cover(s: PointSet, line: DirectedLine, left: Part, right: Part) -> Covering:
    left_ids, right_ids = _left_right(s, line)
    return Covering.merge([_cover_part(s, left_ids, left), _cover_part(s, right_ids, right)])


def _case_both_even(s: PointSet, k: int, t: int) -> Optional[Covering]:
    half = (k // 2, t // 2)
    try:
        line = ham_sandwich(s)
    except PreconditionUnmet:
        return None
    census = halfplane_census(line, s)
    if census.on_line or (census.left_red, census.left_blue) != _counts(*half):
        return None
    logger.debug("k=%d, t=%d: ham-sandwich halving", k, t)
    return _split_cover(s, line, half, half)


def _case_t_even(s: PointSet, k: int, t: int) -> Optional[Covering]:
    j, u = k // 2, t // 2
    m = 4 * j + u
    left, right = (j, u), (j + 1, u)
    if _both_admissible(left, right):
        line = find_line_with_counts(s, m, j + t)
        if line is not None:
            logger.debug("k=%d, t=%d: single line with %d left", k, t, m)
            return _split_cover(s, line, left, right)

    # two opposite lines, each with (3j + 1 - u, j + t - 1) on its left and a (1,3) strip between
    side = (j, u - 1)
    if u < 1 or not admissible(*side):
        return None
    red_target = 3 * j + 1 - u
    n = len(s)
    for state in DirectionSweep(s.points):
        if state.red_prefix[m] != red_target:
            continue
        if state.red_prefix[n] - state.red_prefix[n - m] != red_target:
            continue
        first, second, middle = opposite_lines(s, m, state.direction)
        logger.debug("k=%d, t=%d: opposite lines with a middle star", k, t)
        return Covering.merge(
            [
                _cover_trimmed(s, _left_right(s, first)[0], side),
                _cover_trimmed(s, _left_right(s, second)[0], side),
                Covering(stars=[star_of(s, middle)]),
            ]
        )
    return None


def _cover_trimmed(s: PointSet, ids: Sequence[int], part: Part) -> Covering:
    """Drop one blue from ``ids`` then cover the rest as ``part``."""
    rest, removed = remove_extreme(s.subset(ids), Color.BLUE, 1)
    return Covering.merge([_cover_part(rest, rest.ids, part)], removed)


def _case_t_odd(s: PointSet, k: int, t: int) -> Optional[Covering]:
    j = k // 2
    m = 4 * j + (t - 1) // 2
    left, right = (j, (t - 1) // 2), (j, (t + 1) // 2)
    if not _both_admissible(left, right):
        return None
    line = find_line_with_counts(s, m, j + t - 1)
    if line is None:
        return None
    logger.debug("k=%d, t=%d: single line with %d left", k, t, m)
    return _split_cover(s, line, left, right)


def _case_both_odd(s: PointSet, k: int, t: int) -> Optional[Covering]:
    j = k // 2
    m = 4 * j + (t - 1) // 2
    left, right = (j, (t - 1) // 2), (j + 1, (t + 1) // 2)
    if _both_admissible(left, right):
        line = find_line_with_counts(s, m, j + t - 1)
        if line is not None:
            logger.debug("k=%d, t=%d: single line with %d left", k, t, m)
            return _split_cover(s, line, left, right)

    left, right = (j, (t + 1) // 2), (j + 1, (t - 1) // 2)
    if not _both_admissible(left, right):
        return None
    found = find_line_through_blue(s, m + 1, j + t)
    if found is None:
        return None
    line, y = found
    left_ids, right_ids = _left_right(s, line)
    logger.debug("k=%d, t=%d: line through blue %d", k, t, y)
    return Covering.merge(
        [_cover_part(s, left_ids + [y], left), _cover_part(s, right_ids, right)]
    )


# ----------------------------------------------------------------------
# Fixed-size specialists
# ----------------------------------------------------------------------
def _nine_shape(s: PointSet, line: DirectedLine) -> Optional[Covering]:
    """Two stars from a line through one red and one blue splitting the rest 2R+1B | 2R+2B."""
    census = halfplane_census(line, s)
    if len(census.on_line) != 2:
        return None
    p, y = sorted(census.on_line, key=lambda i: s.color(i) is not Color.RED)
    if s.color(p) is not Color.RED or s.color(y) is not Color.BLUE:
        return None
    left, right = _left_right(s, line)
    for a, b in ((left, right), (right, left)):
        a_red = [i for i in a if s.color(i) is Color.RED]
        a_blue = [i for i in a if s.color(i) is Color.BLUE]
        b_red = sorted(i for i in b if s.color(i) is Color.RED)
        b_blue = [i for i in b if s.color(i) is Color.BLUE]
        if (len(a_red), len(a_blue), len(b_red), len(b_blue)) == (2, 1, 2, 2):
            first = Star(a_blue[0], tuple(sorted(a_red + [p])))  # type: ignore[arg-type]
            second = Star(b_red[0], tuple(sorted(b_blue + [y])))  # type: ignore[arg-type]
            return Covering(stars=[first, second], uncovered=[b_red[1]])
    return None


def cover_nine(s: PointSet) -> Covering:
    """
    Cover eight points of a (5,4)-set with one blue- and one red-centered star.

    The lowest-id blue point counts twice in a weighted ham-sandwich cut; the
    cut passes through one red and one blue point and leaves two reds and
    one blue on one side, two reds and two blues on the other. A (4,5)-set
    is handled through its color swap.
    """
    if (s.r, s.b) == (4, 5):
        return cover_nine(s.swap_colors())
    if (s.r, s.b) != (5, 4):
        raise QuotaMismatch(f"({s.r}, {s.b}) is neither (5,4) nor (4,5)")
    q = min(p.id for p in s.of_color(Color.BLUE))
    covering = None
    try:
        covering = _nine_shape(s, ham_sandwich(s, {q: 2}))
    except PreconditionUnmet:
        logger.debug("Weighted bisector not found, scanning red-blue lines")
    if covering is None:
        covering = _scan_nine(s)
    if covering is None:
        raise UnreachableCase("no red-blue line splits the (5,4)-set as required", {"ids": s.ids})
    return covering


def _scan_nine(s: PointSet) -> Optional[Covering]:
    for red in s.of_color(Color.RED):
        for blue in s.of_color(Color.BLUE):
            covering = _nine_shape(s, DirectedLine.through(red.xy, blue.xy))
            if covering is not None:
                return covering
    return None


def cover_11_11(s: PointSet) -> Covering:
    """
    Cover twenty points of an (11,11)-set.

    Either a line leaves a (3,6)- or (6,3)-set on its left, and both sides
    lose one point each, or two opposite lines with nine points on their left
    cut off two (4,5)- or two (5,4)-sets and a 3+1 strip between them.
    """
    if (s.r, s.b) != (11, 11):
        raise QuotaMismatch(f"({s.r}, {s.b}) is not (11, 11)")
    lines = find_lines_for_targets(s, [(9, 6), (9, 3)])
    for target in sorted(lines):
        left, right = _left_right(s, lines[target])
        logger.debug("(11,11): single line with %s on its left", target)
        return Covering.merge([_cover_one_short(s.subset(left)), _cover_one_short(s.subset(right))])

    for state in DirectionSweep(s.points):
        first, second = state.order[:9], state.order[13:]
        blues = (sum(1 for p in first if not p.is_red), sum(1 for p in second if not p.is_red))
        if blues in ((5, 5), (4, 4)):
            middle = [p.id for p in state.order[9:13]]
            logger.debug("(11,11): opposite lines with %s blues on their left", blues)
            return Covering.merge(
                [
                    cover_nine(s.subset(p.id for p in first)),
                    cover_nine(s.subset(p.id for p in second)),
                    Covering(stars=[star_of(s, middle)]),
                ]
            )
    raise UnreachableCase("no split of the (11,11)-set found", {"ids": s.ids})


def _cover_one_short(s: PointSet) -> Covering:
    """A (3,6)-, (6,3)-, (8,5)- or (5,8)-set with one point uncovered."""
    if general_t_params(s.r, s.b) or general_t_params(s.b, s.r):
        return cover_general_t(s)
    surplus = Color.RED if s.b == 3 * (s.r - 1) else Color.BLUE
    rest, removed = remove_extreme(s, surplus, 1)
    return Covering.merge([cover_equitable(rest)], removed)
