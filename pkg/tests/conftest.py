"""
Shared pytest fixtures for the starcover test suite.

Everything runs in-process on small seeded instances; no network and no
files outside pytest's temporary directories.
"""

from __future__ import annotations

import os
from pathlib import Path
from typing import Callable

import pytest
from hypothesis import strategies as st

# ---------------------------------------------------------------------------
# Runtime isolation.
#
# ``starcover.config`` builds its Settings singleton at import time, and test
# modules import it during collection - before any fixture runs. The
# environment therefore has to be patched here, at conftest import time.
# ---------------------------------------------------------------------------
os.environ.update(
    {
        # An exact search that runs away should fail the test, not hang CI.
        "STARCOVER_BUDGET_NODES": "20000000",
        "STARCOVER_BUDGET_SECS": "120",
        # Small coordinates keep Fraction anchors and SVG output readable.
        "STARCOVER_GENERATOR_RADIUS": "100000",
        "STARCOVER_BENCH_WORKERS": "1",
        "STARCOVER_LOG_LEVEL": "WARNING",
    }
)

from starcover.core.geometry import PointSet  # noqa: E402
from starcover.generators import gen_convex, gen_random, write_point_set  # noqa: E402


# ---------------------------------------------------------------------------
# Builders
# ---------------------------------------------------------------------------
def points(*rows) -> PointSet:
    """``points((0, 0, "R"), (4, 1, "B"), ...)`` with ids numbered from 0."""
    return PointSet.from_tuples(rows)


@pytest.fixture
def make_random() -> Callable[[int, int, int], PointSet]:
    return lambda r, b, seed=0: gen_random(r, b, seed)


@pytest.fixture
def alternating_octagon() -> PointSet:
    return gen_convex("RB" * 4)


@pytest.fixture
def one_star() -> PointSet:
    """A red center inside a blue triangle."""
    return points((0, 0, "R"), (10, 1, "B"), (-6, 9, "B"), (-5, -11, "B"))


@pytest.fixture
def points_file(tmp_path: Path) -> Callable[[PointSet, str], Path]:
    def write(s: PointSet, name: str = "s.json") -> Path:
        path = tmp_path / name
        write_point_set(s, path)
        return path

    return write


# ---------------------------------------------------------------------------
# Hypothesis strategies
# ---------------------------------------------------------------------------
@st.composite
def general_position_sets(draw, min_size: int = 1, max_size: int = 10, bbox: int = 2000) -> PointSet:
    """Small bicolored sets in general position, drawn through the seeded generator."""
    size = draw(st.integers(min_value=min_size, max_value=max_size))
    r = draw(st.integers(min_value=0, max_value=size))
    seed = draw(st.integers(min_value=0, max_value=2**31 - 1))
    return gen_random(r, size - r, seed, bbox=bbox)
