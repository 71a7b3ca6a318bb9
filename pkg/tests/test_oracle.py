"""
Tests for the covering validator, the exact search and the small-value table.
"""

from __future__ import annotations

import pytest
from conftest import points

from starcover.coverings import Covering, Star
from starcover.errors import BudgetExceeded
from starcover.generators import gen_fig4, gen_fig5, gen_random
from starcover.oracle import (
    ViolationKind,
    check_table_value,
    exact_max_cover,
    table_value,
    validate_covering,
)
from starcover.oracle.exact import count_bound


@pytest.fixture
def crossing_pair():
    """Two stars whose edges 0-1 and 4-5 cross."""
    s = points(
        (0, 0, "R"),
        (20, 1, "B"),
        (-6, 15, "B"),
        (-7, -13, "B"),
        (10, 5, "B"),
        (11, -5, "R"),
        (16, 12, "R"),
        (4, 13, "R"),
    )
    return s, Covering(stars=[Star(0, (1, 2, 3)), Star(4, (5, 6, 7))])


# ---------------------------------------------------------------------------
# Validator
# ---------------------------------------------------------------------------
def test_valid_single_star(one_star):
    assert validate_covering(one_star, Covering(stars=[Star(0, (1, 2, 3))])).ok


def test_everything_uncovered_is_valid(one_star):
    assert validate_covering(one_star, Covering.empty(one_star)).ok


def test_crossing_edges_are_reported(crossing_pair):
    s, covering = crossing_pair
    report = validate_covering(s, covering)

    assert ViolationKind.CROSSING in report.kinds()
    crossing = next(v for v in report.violations if v.kind is ViolationKind.CROSSING)
    assert crossing.details["stars"] == [0, 1]


def test_color_pattern_is_reported(one_star):
    report = validate_covering(one_star, Covering(stars=[Star(1, (0, 2, 3))]))
    assert report.kinds() == [ViolationKind.COLOR_PATTERN]


def test_reuse_is_reported(one_star):
    report = validate_covering(one_star, Covering(stars=[Star(0, (1, 2, 3))], uncovered=[0]))
    assert report.kinds() == [ViolationKind.REUSE]
    assert report.violations[0].details == {"id": 0, "count": 2}


def test_unknown_ids_are_reported(one_star):
    report = validate_covering(one_star, Covering(stars=[Star(0, (1, 2, 9))], uncovered=[3]))
    assert ViolationKind.UNKNOWN_ID in report.kinds()


def test_missing_points_are_reported(one_star):
    report = validate_covering(one_star, Covering(uncovered=[0, 1]))
    assert report.kinds() == [ViolationKind.INCOMPLETE]
    assert report.violations[0].details["missing"] == [2, 3]


# ---------------------------------------------------------------------------
# Exact search
# ---------------------------------------------------------------------------
@pytest.mark.parametrize(
    "reds, blues, expected",
    [(3, 1, 4), (2, 2, 0), (5, 4, 8), (6, 2, 8), (0, 5, 0), (6, 6, 8)],
)
def test_count_bound(reds, blues, expected):
    assert count_bound(reds, blues) == expected


@pytest.mark.parametrize("r, b, uncovered", [(1, 1, 2), (2, 2, 4), (3, 1, 0), (1, 3, 0), (2, 3, 1), (5, 4, 1)])
@pytest.mark.parametrize("seed", range(3))
def test_exact_small_sets(r, b, uncovered, seed):
    s = gen_random(r, b, seed=seed)
    result = exact_max_cover(s)

    assert result.optimal
    assert result.u_of_s == uncovered
    assert result.c_of_s == len(s) - uncovered
    assert validate_covering(s, result.best_covering).ok


def test_exact_on_the_alternating_octagon(alternating_octagon):
    result = exact_max_cover(alternating_octagon)
    assert (result.c_of_s, result.u_of_s) == (4, 4)


def test_exact_search_reports_budget_exhaustion():
    s = gen_random(5, 4, seed=1)
    with pytest.raises(BudgetExceeded) as caught:
        exact_max_cover(s, budget_nodes=1)

    best = caught.value.best
    assert not best.optimal
    assert validate_covering(s, best.best_covering).ok


@pytest.mark.parametrize("r, b", [(3, 2), (5, 3)])
def test_fig4_sets_have_no_perfect_covering(r, b):
    assert exact_max_cover(gen_fig4(r, b)).u_of_s > 0


@pytest.mark.slow
def test_fig5_leaves_five_points():
    s = gen_fig5(4)
    try:
        result = exact_max_cover(s, budget_nodes=10**8)
    except BudgetExceeded as exc:
        result = exc.best
    assert result.u_of_s >= 5
    assert result.u_of_s % 4 == 1


# ---------------------------------------------------------------------------
# Table
# ---------------------------------------------------------------------------
@pytest.mark.parametrize(
    "r, b, expected",
    [(1, 1, (2,)), (4, 10, (2,)), (10, 4, (2,)), (10, 7, (1, 5)), (0, 5, (5,)), (20, 20, (4, 8))],
)
def test_table_value(r, b, expected):
    assert table_value(r, b) == expected


def test_table_value_outside_the_range():
    with pytest.raises(ValueError):
        table_value(21, 1)


def test_check_table_value_on_equitable_counts():
    check = check_table_value(3, 1, trials=3)

    assert check.mode == "exact"
    assert check.observed == [0, 0, 0]
    assert check.consistent


def test_check_table_value_on_convex_sets():
    check = check_table_value(6, 2, family="convex", trials=2)
    assert check.entry == [0]
    assert check.consistent


def test_check_table_value_above_the_exact_limit():
    check = check_table_value(12, 10, trials=1)
    assert check.mode == "upper"
    assert check.consistent


def test_check_table_value_rejects_unknown_family():
    with pytest.raises(ValueError):
        check_table_value(3, 1, family="spiral")
