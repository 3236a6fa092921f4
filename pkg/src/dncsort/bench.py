from __future__ import annotations

import statistics
import time
from dataclasses import asdict, dataclass
from typing import Any, Dict, List

from dncsort.algorithms import sort_array
from dncsort.config import BenchSettings
from dncsort.contracts import Checker, CheckMode
from dncsort.logging import get_logger
from dncsort.seeded import SeededRandom

log = get_logger(__name__)


@dataclass(frozen=True)
class BenchRow:
    algo: str
    n: int
    median_seconds: float
    # Worst count over the repeats.
    comparisons: int

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


def bench(settings: BenchSettings) -> List[BenchRow]:
    """Time each algorithm on seeded data in unchecked mode.

    Repeat ``k`` uses the same input for every algorithm, so rows are comparable.
    """
    rows: List[BenchRow] = []
    base = SeededRandom(settings.seed)
    for algo in settings.algos:
        for n in settings.sizes:
            times: List[float] = []
            comparisons = 0
            for rep in range(settings.repeats):
                data = base.derive(rep).int_list(n, settings.low, settings.high)
                ck = Checker(mode=CheckMode.UNCHECKED)
                t0 = time.perf_counter()
                sort_array(algo, data, ck, settings.backend)
                times.append(time.perf_counter() - t0)
                comparisons = max(comparisons, ck.comparisons)
            row = BenchRow(algo.value, n, statistics.median(times), comparisons)
            log.debug("bench %s n=%d: %.6fs, %d comparisons", row.algo, n, row.median_seconds, comparisons)
            rows.append(row)
    return rows


def rows_document(rows: List[BenchRow]) -> Dict[str, Any]:
    return {"rows": [r.to_dict() for r in rows]}
