"""
Known worst-case uncovered counts for small (r, b) and spot checks against them.

``TABLE_U[r][b - 1]`` for ``1 <= b <= r <= 20`` is either a single value or a
tuple of the values still possible. Any single instance can only leave fewer
points uncovered than the worst case, so an observation is consistent when
it does not exceed the largest listed value and has the parity forced by
``r + b``.
"""

import logging
from typing import Callable, Dict, List, Literal, Tuple, Union

from pydantic import BaseModel, Field
from tqdm import tqdm

from ..core.geometry import PointSet
from ..coverings.driver import cover_driver
from ..errors import BudgetExceeded
from ..generators import gen_convex, gen_random, random_pattern
from .exact import exact_max_cover

logger = logging.getLogger(__name__)

Entry = Union[int, Tuple[int, ...]]

#: Largest instance the spot check solves exactly; bigger ones use the driver.
EXACT_LIMIT = 20

TABLE_U: Dict[int, List[Entry]] = {
    1: [2],
    2: [3, 4],
    3: [0, 1, 2],
    4: [1, 2, 3, 4],
    5: [2, 3, 4, 1, 2],
    6: [3, 0, 1, 2, 3, 4],
    7: [4, 1, 2, 3, 4, 5, 2],
    8: [5, 2, 3, 4, 1, 2, 3, 4],
    9: [6, 3, 0, 1, 2, 3, 4, 5, 2],
    10: [7, 4, 1, 2, 3, 4, (1, 5), 2, 3, 4],
    11: [8, 5, 2, 3, 4, 1, 2, 3, 4, 5, 2],
    12: [9, 6, 3, 0, 1, 2, 3, 4, (1, 5), (2, 6), 3, 4],
    13: [10, 7, 4, 1, 2, 3, 4, (1, 5), 2, 3, 4, 5, (2, 6)],
    14: [11, 8, 5, 2, 3, 4, 1, 2, 3, 4, (1, 5), (2, 6), 3, 4],
    15: [12, 9, 6, 3, 0, 1, 2, 3, 4, (1, 5), (2, 6), 3, 4, 5, (2, 6)],
    16: [13, 10, 7, 4, 1, 2, 3, 4, (1, 5), 2, 3, 4, (1, 5), (2, 6), (3, 7), (4, 8)],
    17: [14, 11, 8, 5, 2, 3, 4, 1, 2, 3, 4, (1, 5), (2, 6), (3, 7), 4, 5, (2, 6)],
    18: [15, 12, 9, 6, 3, 0, 1, 2, 3, 4, (1, 5), (2, 6), 3, 4, (1, 5), (2, 6), (3, 7), 4],
    19: [16, 13, 10, 7, 4, 1, 2, 3, 4, (1, 5), 2, 3, 4, (1, 5), (2, 6), (3, 7), 4, 5, (2, 6)],
    20: [17, 14, 11, 8, 5, 2, 3, 4, 1, 2, 3, 4, (1, 5), (2, 6), (3, 7), 4, (1, 5), (2, 6), (3, 7), (4, 8)],
}


def table_value(r: int, b: int) -> Tuple[int, ...]:
    """Possible worst-case uncovered counts for (r, b); symmetric in the colors."""
    hi, lo = max(r, b), min(r, b)
    if lo == 0:
        return (hi,)
    if hi not in TABLE_U:
        raise ValueError(f"({r}, {b}) is outside the table (both counts must be <= 20)")
    entry = TABLE_U[hi][lo - 1]
    return entry if isinstance(entry, tuple) else (entry,)


class TableCheck(BaseModel):
    """Outcome of :func:`check_table_value`."""

    r: int
    b: int
    entry: List[int]
    family: str
    mode: Literal["exact", "upper"]
    observed: List[int] = Field(default_factory=list)
    budget_exceeded: int = 0

    @property
    def max_observed(self) -> int:
        return max(self.observed, default=0)

    @property
    def consistent(self) -> bool:
        parity = (self.r + self.b) % 4
        if self.mode == "upper":
            return all(u % 4 == parity for u in self.observed)
        return all(u <= max(self.entry) and u % 4 == parity for u in self.observed)


Family = Callable[[int, int, int], PointSet]


def _convex_family(r: int, b: int, seed: int) -> PointSet:
    return gen_convex(random_pattern(r, b, seed))


FAMILIES: Dict[str, Family] = {
    "random": lambda r, b, seed: gen_random(r, b, seed),
    "convex": _convex_family,
}


def check_table_value(
    r: int,
    b: int,
    family: str = "random",
    trials: int = 10,
    seed: int = 0,
    progress: bool = False,
) -> TableCheck:
    """
    Generate ``trials`` sets from ``family`` and record the uncovered count of each.

    Up to :data:`EXACT_LIMIT` points the count is exact, so it is a lower
    bound on the worst case; beyond that the driver's count is recorded,
    which only bounds the instance from above.
    """
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; choose from {sorted(FAMILIES)}")
    mode: Literal["exact", "upper"] = "exact" if r + b <= EXACT_LIMIT else "upper"
    check = TableCheck(r=r, b=b, entry=list(table_value(r, b)), family=family, mode=mode)
    for i in tqdm(range(trials), desc=f"U({r},{b})", disable=not progress):
        s = FAMILIES[family](r, b, seed + i)
        if mode == "exact":
            try:
                result = exact_max_cover(s)
            except BudgetExceeded as exc:
                check.budget_exceeded += 1
                logger.warning("Budget exceeded on seed %d: %s", seed + i, exc)
                continue
            check.observed.append(result.u_of_s)
        else:
            check.observed.append(len(cover_driver(s).uncovered))
    logger.info(
        "U(%d,%d) table %s, observed max %d over %d trials", r, b, check.entry, check.max_observed, trials
    )
    return check
