"""
Tests for sign tables, equitable cuttings and recursive subdivisions.
"""

from __future__ import annotations

from dataclasses import replace

import pytest
from conftest import points
from hypothesis import given, settings
from hypothesis import strategies as st

from starcover.core import partition
from starcover.core.geometry import DirectedLine, halfplane_census
from starcover.core.partition import (
    ConvexRegion,
    SignTable,
    SubdivisionEngine,
    ThreeCut,
    TwoCut,
    build_sign_table,
    choose_couples_cd,
    choose_couples_gh,
    equitable_subdivision,
    find_equitable_2cut,
    find_equitable_2cuts,
    find_equitable_3cut,
    region_census,
    subdivide_s_s1,
    verify_subdivision,
)
from starcover.errors import InvalidQuery, QuotaMismatch, ZeroSignFound
from starcover.generators import gen_random


# ---------------------------------------------------------------------------
# Sign tables
# ---------------------------------------------------------------------------
def test_sign_table_counts_blues_left_of_each_red():
    s = points((0, 0, "B"), (1, 5, "R"), (2, -3, "B"), (3, 1, "R"), (4, 7, "B"))
    table = build_sign_table(s)

    assert table.shear == 0
    assert table.blue_left == (1, 1, 2)
    assert table.counts == [1, 2]
    # the canonical line with one red on its left
    census = halfplane_census(table.line(1), s)
    assert (census.left_red, census.left_blue) == (1, 1)


def test_sign_table_shears_repeated_x():
    s = points((0, 0, "R"), (0, 5, "B"), (3, 1, "R"), (5, -2, "B"))
    table = build_sign_table(s)

    assert table.shear > 0
    for i in range(table.r + 1):
        census = halfplane_census(table.line(i), s)
        assert census.on_line == ()
        assert census.left_red == i
        assert census.left_blue == table.blue_left[i]


@pytest.mark.parametrize("seed", range(6))
def test_sign_monotonicity(seed):
    star = 2
    s = gen_random(30, 30, seed=seed)
    table = build_sign_table(s)
    for g in range(1, 7):
        for h in range(0, 6):
            if (star + 1) * g + star * h > s.r:
                continue
            if table.sg(g, h, star) == -1 and (star + 1) * (g - 1) + star * (h + 1) <= s.r:
                assert table.sg(g - 1, h + 1, star) == -1


# ---------------------------------------------------------------------------
# 2-cuttings and 3-cuttings
# ---------------------------------------------------------------------------
@pytest.mark.parametrize("seed", range(4))
def test_equitable_2cuts_are_realized(seed):
    s = gen_random(5, 4, seed=seed)
    found = find_equitable_2cuts(s)

    assert (0, 0) in found and (5, 4) in found
    for (red, blue), line in found.items():
        census = halfplane_census(line, s)
        assert census.on_line == ()
        assert (census.left_red, census.left_blue) == (red, blue)
        assert find_equitable_2cut(s, red, blue) is not None


def test_equitable_2cut_rejects_quotas_beyond_the_set():
    with pytest.raises(InvalidQuery):
        find_equitable_2cut(gen_random(2, 2, seed=0), 3, 0)


@pytest.mark.parametrize("seed", range(6))
def test_equitable_3cut_meets_every_quota(seed):
    s = gen_random(9, 3, seed=seed)
    quotas = [(3, 1), (3, 1), (3, 1)]
    cut = find_equitable_3cut(s, quotas)

    if isinstance(cut, TwoCut):
        census = halfplane_census(cut.line, s)
        assert census.on_line == ()
        assert (census.left_red, census.left_blue) == quotas[cut.quota_index]
    else:
        assert isinstance(cut, ThreeCut)
        census = cut.wedge_census(s)
        assert sorted(census) == sorted(quotas)
        assert sum(red + blue for red, blue in census) == len(s)


def test_3cut_quotas_must_add_up():
    with pytest.raises(InvalidQuery):
        find_equitable_3cut(gen_random(3, 3, seed=0), [(1, 1), (1, 1), (1, 0)])


def test_even_group_count_halves():
    s = gen_random(12, 4, seed=1)
    couples = choose_couples_cd(s, 3, 1, 4)
    assert couples.parts == ((2, 0), (2, 0))


# 9 reds on a circle around 3 clustered blues: no line cuts off (3, 1) or (6, 2)
RING = points(
    (995, 100, "R"), (698, 716, "R"), (74, 997, "R"), (-584, 812, "R"), (-969, 246, "R"),
    (-901, -434, "R"), (-411, -912, "R"), (271, -963, "R"), (826, -563, "R"),
    (0, 0, "B"), (3, 1, "B"), (-1, 4, "B"),
)


def test_ring_needs_three_couples():
    table = build_sign_table(RING)
    assert table.blue_left == (0, 0, 0, 0, 3, 3, 3, 3, 3, 3)
    assert choose_couples_cd(table, 3, 1, 3).parts == ((1, 0), (1, 0), (1, 0))


def _table(*blue_left: int) -> SignTable:
    return SignTable(shear=0, red_keys=tuple(range(len(blue_left) - 1)), blue_left=blue_left)


@pytest.mark.parametrize(
    "blue_left, expected",
    [
        ((0,) * 10, ((2, 1), (1, 2))),
        ((0, 0, 2, 2, 3, 5, 7, 7, 8, 8), ((1, 1), (1, 1), (1, 1))),
    ],
)
def test_couples_for_three_and_three(blue_left, expected):
    assert choose_couples_gh(_table(*blue_left), 1, 3, 3) == expected


def test_zero_sign_is_reported():
    # sg(a, b) = sign(a - b) here, so every diagonal couple is zero
    with pytest.raises(ZeroSignFound) as found:
        choose_couples_gh(_table(*range(10)), 1, 3, 3)
    a, b = found.value.couple
    assert a == b


def test_couples_reject_a_table_breaking_the_exchange_property():
    with pytest.raises(InvalidQuery, match="exchange"):
        choose_couples_gh(_table(0, 0, 0, 0, 0, 9, 0, 0, 0, 0), 1, 3, 3)


@given(st.lists(st.integers(min_value=0, max_value=9), min_size=10, max_size=10))
@settings(max_examples=200, deadline=None)
def test_couples_for_three_and_three_on_any_monotone_table(values):
    table = _table(*sorted(values))
    try:
        parts = choose_couples_gh(table, 1, 3, 3)
    except ZeroSignFound as found:
        assert table.sg(*found.couple, 1) == 0
        return

    assert len(parts) in (2, 3)
    assert (sum(a for a, _ in parts), sum(b for _, b in parts)) == (3, 3)
    signs = {table.sg(a, b, 1) for a, b in parts}
    assert len(signs) == 1 and 0 not in signs
    assert all(a <= 2 for a, _ in parts) or all(b <= 2 for _, b in parts)


# ---------------------------------------------------------------------------
# Subdivisions
# ---------------------------------------------------------------------------
@pytest.mark.parametrize("c, d", [(3, 1), (1, 3), (2, 2)])
@pytest.mark.parametrize("g", [2, 3, 5])
@pytest.mark.parametrize("seed", range(2))
def test_equitable_subdivision(c, d, g, seed):
    s = gen_random(c * g, d * g, seed=seed)
    regions = equitable_subdivision(s, c, d, g)

    assert len(regions) == g
    assert verify_subdivision(s, regions) == []
    assert all(region_census(s, region) == (c, d) for region in regions)


@pytest.mark.parametrize("g, h", [(1, 1), (2, 1), (1, 3), (2, 2), (3, 2)])
@pytest.mark.parametrize("seed", range(2))
def test_subdivide_s_s1(g, h, seed):
    star = 4
    s = gen_random((star + 1) * g + star * h, star * g + (star + 1) * h, seed=seed)
    regions = subdivide_s_s1(s, star, g, h)

    assert verify_subdivision(s, regions) == []
    kinds = [region.kind for region in regions]
    assert kinds.count("X") == g and kinds.count("Y") == h
    for region in regions:
        expected = (star + 1, star) if region.kind == "X" else (star, star + 1)
        assert region_census(s, region) == expected
        assert region.quota == expected


def test_subdivision_rejects_wrong_counts():
    with pytest.raises(QuotaMismatch):
        equitable_subdivision(gen_random(7, 2, seed=0), 3, 1, 2)
    with pytest.raises(InvalidQuery):
        subdivide_s_s1(gen_random(5, 4, seed=0), 4, 0, 0)


def test_ring_is_split_by_a_three_cut(monkeypatch):
    calls = []
    real = partition.find_equitable_3cut

    def spy(s, quotas):
        calls.append(list(quotas))
        return real(s, quotas)

    monkeypatch.setattr(partition, "find_equitable_3cut", spy)
    regions = equitable_subdivision(RING, 3, 1, 3)

    assert calls == [[(3, 1)] * 3]
    assert verify_subdivision(RING, regions) == []
    assert [region_census(RING, region) for region in regions] == [(3, 1)] * 3


def test_verify_reports_a_region_off_its_quota():
    s = gen_random(9, 3, seed=0)
    regions = equitable_subdivision(s, 3, 1, 3)
    assert [region.quota for region in regions] == [(3, 1)] * 3

    wrong = [replace(regions[0], quota=(2, 2))] + regions[1:]
    assert verify_subdivision(s, wrong) == ["region 0 holds (3, 1), declared (2, 2)"]


def test_engine_records_depth():
    s = gen_random(24, 8, seed=3)
    engine = SubdivisionEngine((3, 1))
    regions = engine.run(s, 8)

    assert len(regions) == 8
    # a three-way cut leaves at most 5 groups, so one level never suffices
    assert 2 <= engine.max_depth <= 7


def test_convex_region_membership_is_strict():
    region = ConvexRegion((DirectedLine((0, 0), (1, 0)), DirectedLine((0, 0), (0, -1))), members=())
    assert region.contains((1, 1))
    assert not region.contains((-1, 1))
    assert not region.contains((1, 0))
