"""
Bench Exporter
Times covering strategies over growing instances and writes CSV rows
"""

import csv
import io
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from typing import Callable, Dict, List, Optional, Sequence, TextIO, Tuple

import numpy as np
from tqdm import tqdm

from ..config import settings
from ..core.geometry import PointSet
from ..coverings.base import Covering
from ..coverings.convex import max_cover_convex
from ..coverings.driver import cover_driver
from ..coverings.equitable import cover_equitable
from ..coverings.separable import cover_linearly_separable
from ..generators import gen_convex, gen_random, gen_separable, random_pattern

logger = logging.getLogger(__name__)

CSV_FIELDS = ("family", "n", "seed", "strategy", "covered", "uncovered", "wall_time")


@dataclass(frozen=True)
class BenchCase:
    family: str
    n: int
    seed: int = 0


@dataclass
class BenchRow:
    family: str
    n: int
    seed: int
    strategy: str
    covered: int
    uncovered: int
    wall_time: float  # seconds, covering only


def _separable(n: int, seed: int) -> Tuple[PointSet, Callable[[PointSet], Covering]]:
    g = max(1, n // 8)
    h = max(1, n // 4 - g)
    return gen_separable(3 * g + h, 3 * h + g, seed), cover_linearly_separable


def _convex(n: int, seed: int) -> Tuple[PointSet, Callable[[PointSet], Covering]]:
    return gen_convex(random_pattern(n - n // 2, n // 2, seed)), max_cover_convex


def _equitable(n: int, seed: int) -> Tuple[PointSet, Callable[[PointSet], Covering]]:
    g = max(1, n // 4)
    return gen_random(3 * g, g, seed), cover_equitable


def _driver(n: int, seed: int) -> Tuple[PointSet, Callable[[PointSet], Covering]]:
    rng = np.random.default_rng(seed)
    r = int(rng.integers(n // 2, n))
    return gen_random(r, n - r, seed), cover_driver


#: Instance builder and strategy per family.
FAMILIES: Dict[str, Callable[[int, int], Tuple[PointSet, Callable[[PointSet], Covering]]]] = {
    "separable": _separable,
    "convex-dp": _convex,
    "equitable": _equitable,
    "driver": _driver,
}

#: Sizes used when the caller does not pass any.
DEFAULT_SIZES: Dict[str, Tuple[int, ...]] = {
    "separable": (100, 200, 400, 800, 1600, 3200),
    "convex-dp": (8, 12, 16, 20, 24, 32, 40),
    "equitable": (100, 200, 400, 800, 1600),
    "driver": (100, 250, 500, 1000, 2000),
}


def run_case(case: BenchCase) -> BenchRow:
    """Build one instance and time its covering. Runs in a worker process when pooled."""
    s, strategy = FAMILIES[case.family](case.n, case.seed)
    start = time.perf_counter()
    covering = strategy(s)
    elapsed = time.perf_counter() - start
    return BenchRow(
        family=case.family,
        n=len(s),
        seed=case.seed,
        strategy=strategy.__name__,
        covered=covering.covered,
        uncovered=len(covering.uncovered),
        wall_time=round(elapsed, 6),
    )


def plan(families: Sequence[str], sizes: Optional[Sequence[int]] = None, seeds: int = 1) -> List[BenchCase]:
    cases = []
    for family in families:
        if family not in FAMILIES:
            raise ValueError(f"unknown bench family {family!r}; choose from {sorted(FAMILIES)}")
        for n in sizes or DEFAULT_SIZES[family]:
            cases.extend(BenchCase(family, n, seed) for seed in range(seeds))
    return cases


def run_bench(cases: Sequence[BenchCase], workers: Optional[int] = None, progress: bool = False) -> List[BenchRow]:
    """
    Run every case, in a process pool when ``workers`` (default
    ``settings.bench_workers``) is above one. Rows come back in case order.
    """
    workers = workers or settings.bench_workers
    logger.info("Bench: %d cases on %d worker(s)", len(cases), workers)
    if workers <= 1:
        return [run_case(case) for case in tqdm(cases, desc="bench", disable=not progress)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        results = pool.map(run_case, cases)
        return list(tqdm(results, total=len(cases), desc="bench", disable=not progress))


def growth_exponents(rows: Sequence[BenchRow]) -> Dict[str, float]:
    """Least-squares slope of log(time) against log(n) per family."""
    exponents: Dict[str, float] = {}
    for family in sorted({row.family for row in rows}):
        picked = [row for row in rows if row.family == family and row.wall_time > 0]
        if len({row.n for row in picked}) < 2:
            continue
        n = np.log([row.n for row in picked])
        t = np.log([row.wall_time for row in picked])
        exponents[family] = float(np.polyfit(n, t, 1)[0])
    return exponents


def write_csv(rows: Sequence[BenchRow], stream: TextIO) -> None:
    writer = csv.DictWriter(stream, fieldnames=CSV_FIELDS)
    writer.writeheader()
    for row in rows:
        writer.writerow(asdict(row))


def to_csv(rows: Sequence[BenchRow]) -> str:
    buffer = io.StringIO()
    write_csv(rows, buffer)
    return buffer.getvalue()
