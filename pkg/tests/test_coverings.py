"""
Tests for the full-cover specialists: equitable, separable, convex and
double-chain sets, plus the auto dispatcher.

Every covering produced here is re-checked by the independent validator.
"""

from __future__ import annotations

import pytest
from conftest import points

from starcover.core.geometry import Color, DirectedLine
from starcover.coverings import (
    Covering,
    Star,
    choose_strategy,
    cover_auto,
    cover_convex_greedy,
    cover_double_chain,
    cover_equitable,
    cover_linearly_separable,
    decide_convex_full,
    is_linearly_separable,
    max_cover_convex,
    star_of,
)
from starcover.coverings.base import quota_gh, remove_extreme
from starcover.errors import NotConvex, NotSeparable, QuotaMismatch
from starcover.generators import (
    gen_convex,
    gen_double_chain,
    gen_random,
    gen_separable,
    random_pattern,
)
from starcover.oracle import exact_max_cover, validate_covering


def _check(s, covering: Covering) -> Covering:
    report = validate_covering(s, covering)
    assert report.ok, report.violations
    assert (len(s) - len(covering.uncovered)) % 4 == 0
    return covering


# ---------------------------------------------------------------------------
# Stars and quotas
# ---------------------------------------------------------------------------
def test_star_of_centers_the_odd_color(one_star):
    star = star_of(one_star, [3, 0, 2, 1])
    assert star == Star(0, (1, 2, 3))
    assert star.colors_ok(one_star)


def test_star_of_rejects_two_two():
    s = points((0, 0, "R"), (5, 1, "R"), (2, 7, "B"), (-3, 4, "B"))
    with pytest.raises(QuotaMismatch):
        star_of(s, [0, 1, 2, 3])


def test_star_needs_distinct_points():
    with pytest.raises(ValueError):
        Star(1, (1, 2, 3))


@pytest.mark.parametrize(
    "r, b, expected",
    [(3, 1, (1, 0)), (1, 3, (0, 1)), (4, 4, (1, 1)), (5, 7, (1, 2)), (4, 3, None), (0, 0, (0, 0))],
)
def test_quota_gh(r, b, expected):
    assert quota_gh(r, b) == expected


def test_remove_extreme_prefers_the_lowest_hull_vertex():
    s = points((0, -10, "R"), (0, 0, "R"), (8, 3, "B"), (-7, 5, "B"), (1, 12, "R"))
    rest, removed = remove_extreme(s, Color.RED, 2)

    assert removed == [0, 1]
    assert sorted(rest.ids) == [2, 3, 4]


# ---------------------------------------------------------------------------
# Equitable sets
# ---------------------------------------------------------------------------
@pytest.mark.parametrize("g", [1, 2, 3, 6])
@pytest.mark.parametrize("swap", [False, True])
@pytest.mark.parametrize("seed", range(3))
def test_equitable_sets_are_covered_completely(g, swap, seed):
    s = gen_random(3 * g, g, seed=seed)
    if swap:
        s = s.swap_colors()
    covering = _check(s, cover_equitable(s))

    assert covering.uncovered == []
    assert len(covering.stars) == g


def test_empty_set_has_the_empty_covering():
    assert cover_equitable(gen_random(0, 0)).stars == []


def test_equitable_rejects_other_ratios():
    with pytest.raises(QuotaMismatch):
        cover_equitable(gen_random(4, 2, seed=0))


# ---------------------------------------------------------------------------
# Linearly separable sets
# ---------------------------------------------------------------------------
@pytest.mark.parametrize("g, h", [(1, 0), (0, 1), (1, 1), (2, 1), (1, 3), (4, 4), (6, 2)])
@pytest.mark.parametrize("seed", range(3))
def test_separable_sets_are_covered_completely(g, h, seed):
    s = gen_separable(3 * g + h, 3 * h + g, seed=seed)
    covering = _check(s, cover_linearly_separable(s))

    assert covering.uncovered == []
    assert covering.center_counts(s) == (h, g)


def test_separating_line_is_found():
    s = gen_separable(5, 7, seed=2)
    line = is_linearly_separable(s)
    assert line is not None
    assert all(line.side(p.xy) == (1 if p.is_red else -1) for p in s)


def test_separable_accepts_a_given_line():
    s = gen_separable(4, 4, seed=0)
    covering = cover_linearly_separable(s, DirectedLine((0, 0), (0, 1)))
    assert covering.uncovered == []


def test_separable_rejects_a_wrong_line():
    s = gen_separable(4, 4, seed=0)
    with pytest.raises(NotSeparable):
        cover_linearly_separable(s, DirectedLine((0, 0), (1, 0)))


def test_mixed_set_is_not_separable():
    s = points((0, 0, "R"), (10, 10, "R"), (0, 10, "B"), (10, 0, "B"))
    assert is_linearly_separable(s) is None


# ---------------------------------------------------------------------------
# Convex position
# ---------------------------------------------------------------------------
@pytest.mark.parametrize("g, h", [(1, 0), (1, 1), (2, 1), (1, 2), (3, 2), (2, 4)])
@pytest.mark.parametrize("seed", range(4))
def test_convex_greedy_leaves_at_most_four(g, h, seed):
    s = gen_convex(random_pattern(3 * g + h, 3 * h + g, seed))
    covering = _check(s, cover_convex_greedy(s))
    assert len(covering.uncovered) <= 4


@pytest.mark.parametrize("pattern", ["RB" * 8, "RRBB" * 4])
def test_alternating_16_gons_are_tight(pattern):
    s = gen_convex(pattern)

    greedy = _check(s, cover_convex_greedy(s))
    full, witness = decide_convex_full(s)
    best = _check(s, max_cover_convex(s))

    assert len(greedy.uncovered) == 4
    assert (full, witness) == (False, None)
    assert best.covered == 12


def test_alternating_octagon_covers_four(alternating_octagon):
    assert max_cover_convex(alternating_octagon).covered == 4
    assert exact_max_cover(alternating_octagon).c_of_s == 4


def test_convex_dp_finds_full_witnesses():
    s = gen_convex("RRRBRBBB")
    full, witness = decide_convex_full(s)

    assert full
    _check(s, witness)
    assert witness.uncovered == []


@pytest.mark.parametrize("seed", range(12))
def test_convex_dp_matches_the_exact_oracle(seed):
    n = 5 + seed % 6
    s = gen_convex(random_pattern(n - n // 3, n // 3, seed))
    best = _check(s, max_cover_convex(s))
    exact = exact_max_cover(s)
    full, _ = decide_convex_full(s)

    assert best.covered == exact.c_of_s
    assert full == (exact.c_of_s == len(s))


def test_convex_algorithms_reject_interior_points(one_star):
    with pytest.raises(NotConvex):
        max_cover_convex(one_star)


# ---------------------------------------------------------------------------
# Double chains
# ---------------------------------------------------------------------------
@pytest.mark.parametrize(
    "colors1, colors2",
    [
        ("RRRB", "BBBR"),
        ("RRRBR", "RRB"),
        ("RBRBRB", "BRBRBB"),
        ("BBBB", "RRRRRBRR"),
        ("RBBRRBRB", "BRRBRBBR"),
    ],
)
@pytest.mark.parametrize("seed", range(3))
def test_double_chains_are_covered_completely(colors1, colors2, seed):
    dc = gen_double_chain(colors1, colors2, seed)
    assert quota_gh(dc.points.r, dc.points.b) is not None
    covering = _check(dc.points, cover_double_chain(dc))
    assert covering.uncovered == []


def test_double_chain_needs_a_quota():
    dc = gen_double_chain("RR", "BBR", seed=0)
    with pytest.raises(QuotaMismatch):
        cover_double_chain(dc)


# ---------------------------------------------------------------------------
# Auto dispatch
# ---------------------------------------------------------------------------
def test_auto_picks_the_specialist():
    assert choose_strategy(gen_random(6, 2, seed=0)) == "equitable"
    assert choose_strategy(gen_separable(5, 7, seed=0)) == "separable"
    assert choose_strategy(gen_convex("RBRRBBRB")) == "convex-dp"
    assert choose_strategy(gen_convex("RB" * 16)) == "convex-greedy"
    assert choose_strategy(gen_random(7, 4, seed=0)) == "driver"


@pytest.mark.parametrize(
    "s",
    [
        gen_random(6, 2, seed=1),
        gen_separable(4, 4, seed=1),
        gen_convex("RRBRBB"),
        gen_random(7, 4, seed=1),
    ],
    ids=["equitable", "separable", "convex", "driver"],
)
def test_auto_coverings_are_valid(s):
    strategy, covering = cover_auto(s)
    _check(s, covering)
    assert strategy == choose_strategy(s)
