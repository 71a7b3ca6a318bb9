"""
Tests for the seeded instance generators and the lower-bound constructions.
"""

from __future__ import annotations

import pytest

from starcover.core.geometry import Color, convex_hull, is_convex_position
from starcover.errors import ExhaustedRetries
from starcover.generators import (
    gen_convex,
    gen_double_chain,
    gen_fig4,
    gen_fig5,
    gen_general_t,
    gen_random,
    gen_separable,
    random_pattern,
    splitting_diagonals,
)


def _coords(s):
    return [(p.id, p.x, p.y, p.color) for p in s]


# ---------------------------------------------------------------------------
# Random families
# ---------------------------------------------------------------------------
def test_gen_random_is_deterministic_per_seed():
    assert _coords(gen_random(6, 4, seed=11)) == _coords(gen_random(6, 4, seed=11))
    assert _coords(gen_random(6, 4, seed=11)) != _coords(gen_random(6, 4, seed=12))


@pytest.mark.parametrize("r, b", [(0, 0), (1, 0), (7, 5), (20, 20)])
def test_gen_random_counts_and_position(r, b):
    s = gen_random(r, b, seed=3, bbox=5000)

    assert (s.r, s.b) == (r, b)
    assert sorted(s.ids) == list(range(r + b))
    assert s.general_position
    assert all(abs(p.x) <= 5000 and abs(p.y) <= 5000 for p in s)


def test_gen_random_rejects_a_tiny_box():
    with pytest.raises(ExhaustedRetries):
        gen_random(3, 3, bbox=10)


def test_gen_random_rejects_negative_counts():
    with pytest.raises(ValueError):
        gen_random(-1, 2)


def test_gen_separable_splits_on_the_y_axis():
    s = gen_separable(7, 5, seed=4)
    assert all((p.x < 0) == p.is_red for p in s)
    assert s.general_position


def test_gen_general_t_counts():
    s = gen_general_t(4, 3, seed=1)
    assert (s.r, s.b) == (9, 10)
    with pytest.raises(ValueError):
        gen_general_t(1, 4)


def test_random_pattern():
    pattern = random_pattern(5, 3, seed=2)
    assert sorted(pattern) == sorted("RRRRRBBB")
    assert pattern == random_pattern(5, 3, seed=2)


# ---------------------------------------------------------------------------
# Convex sets and double chains
# ---------------------------------------------------------------------------
@pytest.mark.parametrize("pattern", ["RRRB", "RB" * 8, "RRBBRBRBBB"])
def test_gen_convex_places_ids_counterclockwise(pattern):
    s = gen_convex(pattern)
    hull = convex_hull(s)
    start = hull.index(0)

    assert is_convex_position(s)
    assert hull[start:] + hull[:start] == list(range(len(pattern)))
    assert "".join(s.color(i).value for i in range(len(pattern))) == pattern


@pytest.mark.parametrize("pattern", ["", "RGB"])
def test_gen_convex_rejects_bad_patterns(pattern):
    with pytest.raises(ValueError):
        gen_convex(pattern)


def test_gen_double_chain_is_valid():
    dc = gen_double_chain("RRB", "BRBBR", seed=5)
    dc.validate()

    assert len(dc.chain1) == 3 and len(dc.chain2) == 5
    assert [dc.points.color(i) for i in dc.chain1] == [Color.RED, Color.RED, Color.BLUE]
    assert len(dc.circ) == 8


def test_gen_double_chain_needs_both_chains():
    with pytest.raises(ValueError):
        gen_double_chain("", "RB")


# ---------------------------------------------------------------------------
# Lower-bound constructions
# ---------------------------------------------------------------------------
@pytest.mark.parametrize("r, b", [(3, 2), (5, 3), (7, 4), (10, 6)])
def test_fig4_cluster_is_never_split(r, b):
    s = gen_fig4(r, b)
    polygon = list(range(2 * b))
    cluster = list(range(2 * b, r + b))

    assert (s.r, s.b) == (r, b)
    assert s.general_position
    assert splitting_diagonals(s, polygon, cluster) == []


@pytest.mark.parametrize("r, b", [(3, 3), (9, 3), (4, 1)])
def test_fig4_needs_b_below_r_below_3b(r, b):
    with pytest.raises(ValueError):
        gen_fig4(r, b)


@pytest.mark.parametrize("k", [1, 2, 4])
def test_fig5_is_a_polygon_around_one_red(k):
    s = gen_fig5(k)

    assert (s.r, s.b) == (2 * k + 1, 2 * k)
    assert s.general_position
    hull = convex_hull(s)
    assert len(hull) == 4 * k
    assert 4 * k not in hull
    assert s.color(4 * k) is Color.RED


def test_fig5_needs_positive_k():
    with pytest.raises(ValueError):
        gen_fig5(0)
