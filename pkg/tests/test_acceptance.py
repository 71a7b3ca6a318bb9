"""
Seeded sweeps at full size for every coverer, the convex decision procedure
and the small-value table.

All tests here are marked ``slow`` and deselected by default; run them with
``pytest -m slow``.
"""

from __future__ import annotations

import math

import numpy as np
import pytest

from starcover.coverings import (
    cover_11_11,
    cover_convex_greedy,
    cover_double_chain,
    cover_driver,
    cover_equitable,
    cover_general_t,
    cover_linearly_separable,
    decide_convex_full,
    eight_ninths_bound,
    max_cover_convex,
    upper_range_bound,
)
from starcover.coverings.bounds import HIGH_RATIO, LOW_RATIO, admissible, ratio
from starcover.generators import (
    gen_convex,
    gen_double_chain,
    gen_general_t,
    gen_random,
    gen_separable,
    random_pattern,
)
from starcover.oracle import exact_max_cover, validate_covering

pytestmark = pytest.mark.slow


def _check(s, covering):
    report = validate_covering(s, covering)
    assert report.ok, report.violations
    assert (len(s) - len(covering.uncovered)) % 4 == 0
    return covering


def _quota(seed: int, most: int):
    """Seeded ``(g, h)`` with ``0 < g + h <= most``."""
    rng = np.random.default_rng(seed)
    g = int(rng.integers(0, most + 1))
    h = int(rng.integers(0 if g else 1, most - g + 1))
    return g, h


# ---------------------------------------------------------------------------
# Full coverings
# ---------------------------------------------------------------------------
@pytest.mark.parametrize("seed", range(200))
def test_equitable_sweep(seed):
    g = 1 + seed % 25
    s = gen_random(3 * g, g, seed=seed)
    if seed % 2:
        s = s.swap_colors()
    covering = _check(s, cover_equitable(s))
    assert covering.uncovered == []


@pytest.mark.parametrize("seed", range(200))
def test_separable_sweep(seed):
    g, h = _quota(seed, 100)
    s = gen_separable(3 * g + h, 3 * h + g, seed=seed)
    covering = _check(s, cover_linearly_separable(s))

    assert covering.uncovered == []
    assert covering.center_counts(s) == (h, g)


@pytest.mark.parametrize("seed", range(200))
def test_double_chain_sweep(seed):
    g, h = _quota(seed, 12)
    pattern = random_pattern(3 * g + h, g + 3 * h, seed)
    split = 1 + seed % (len(pattern) - 1)
    dc = gen_double_chain(pattern[:split], pattern[split:], seed)

    covering = _check(dc.points, cover_double_chain(dc))
    assert covering.uncovered == []


# ---------------------------------------------------------------------------
# Convex position
# ---------------------------------------------------------------------------
@pytest.mark.parametrize("seed", range(200))
def test_convex_greedy_sweep(seed):
    g, h = _quota(seed, 15)
    s = gen_convex(random_pattern(3 * g + h, 3 * h + g, seed))
    covering = _check(s, cover_convex_greedy(s))
    assert len(covering.uncovered) <= 4


@pytest.mark.parametrize("seed", range(500))
def test_convex_dp_agrees_with_the_oracle(seed):
    rng = np.random.default_rng(seed)
    n = int(rng.integers(4, 13))
    reds = int(rng.integers(0, n + 1))
    s = gen_convex(random_pattern(reds, n - reds, seed))

    exact = exact_max_cover(s)
    full, witness = decide_convex_full(s)
    assert _check(s, max_cover_convex(s)).covered == exact.c_of_s
    assert full == (exact.u_of_s == 0)
    if full:
        assert _check(s, witness).uncovered == []


# ---------------------------------------------------------------------------
# Partial coverings
# ---------------------------------------------------------------------------
@pytest.mark.parametrize("seed", range(300))
def test_general_t_sweep(seed):
    rng = np.random.default_rng(seed)
    while True:
        t = int(rng.integers(0, 16))
        k = int(rng.integers(0, 50))
        if admissible(k, t) and 0 < 4 * k + t <= 200:
            break
    s = gen_general_t(k, t, seed=seed)
    covering = _check(s, cover_general_t(s))
    assert len(covering.uncovered) <= t


@pytest.mark.parametrize("seed", range(100))
@pytest.mark.parametrize("r, b, left", [(5, 4, 1), (2, 3, 1)])
def test_smallest_general_t_sets(r, b, left, seed):
    s = gen_random(r, b, seed=seed)
    assert len(_check(s, cover_general_t(s)).uncovered) == left


@pytest.mark.parametrize("seed", range(100))
def test_eleven_eleven_sweep(seed):
    s = gen_random(11, 11, seed=seed)
    assert len(_check(s, cover_11_11(s)).uncovered) == 2


@pytest.mark.parametrize("seed", range(300))
def test_driver_bounds_sweep(seed):
    rng = np.random.default_rng(seed)
    n = int(rng.integers(8, 401))
    b = int(rng.integers(0, n // 2 + 1))
    r = n - b
    s = gen_random(r, b, seed=seed)
    covering = _check(s, cover_driver(s))
    alpha = ratio(r, b)

    assert covering.covered >= covering.certificate.bound_ceil
    if alpha < LOW_RATIO:
        assert len(covering.uncovered) == r - 3 * b
    elif alpha <= HIGH_RATIO:
        assert covering.covered >= math.ceil(eight_ninths_bound(r, b))
    else:
        assert covering.covered >= math.ceil(upper_range_bound(r, b))


# ---------------------------------------------------------------------------
# Small-value table
# ---------------------------------------------------------------------------
@pytest.mark.parametrize("seed", range(100))
@pytest.mark.parametrize("r, b, u", [(3, 1, 0), (2, 3, 1), (5, 4, 1), (1, 1, 2), (2, 2, 4)])
def test_exact_values_of_small_sets(r, b, u, seed):
    result = exact_max_cover(gen_random(r, b, seed=seed))
    assert result.optimal
    assert result.u_of_s == u
