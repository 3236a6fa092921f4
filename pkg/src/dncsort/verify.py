"""Seeded verification campaigns.

Every case draws one array from ``(seed, case index)`` and runs each selected
algorithm on its own copy under a fresh checker. A case fails when a check
raises or when the output differs from the oracle sort. Failing inputs are
shrunk greedily while they keep failing with the same proviso.
"""
from __future__ import annotations

import dataclasses
import time
from concurrent.futures import ThreadPoolExecutor
from typing import List, Optional, Sequence, Tuple

from dncsort.algorithms import TRACE_NAMES, sort_array
from dncsort.config import Algo, MergeBackend, VerifySettings
from dncsort.contracts import (
    Checker,
    CheckMode,
    ContractViolation,
    Location,
    Proviso,
    VerificationReport,
    Violation,
)
from dncsort.core import Snapshot, oracle_sort
from dncsort.logging import get_logger
from dncsort.mutants import Mutant
from dncsort.seeded import case_input

log = get_logger(__name__)

# Upper bound on re-runs spent shrinking one counterexample.
SHRINK_BUDGET = 2000


def run_case(
    algo: Algo,
    values: Sequence[int],
    *,
    mode: CheckMode = CheckMode.FULL,
    backend: MergeBackend = MergeBackend.REC,
    mutant: Optional[Mutant] = None,
) -> Optional[Violation]:
    ck = Checker(mode=mode, mutant=mutant)
    a = list(values)
    try:
        sort_array(algo, a, ck, backend)
    except ContractViolation as exc:
        return exc.violation
    expected = oracle_sort(values)
    if a != expected:
        return Violation(
            Proviso.POST,
            Location(TRACE_NAMES[algo], "oracle", 0, len(a), len(a)),
            f"output differs from the oracle sort {expected}",
            Snapshot.capture(values),
            tuple(a),
        )
    return None


def _toward_zero(x: int) -> List[int]:
    if x == 0:
        return []
    step = 1 if x > 0 else -1
    return list(dict.fromkeys([0, x // 2 if x > 0 else -((-x) // 2), x - step]))


def shrink(
    algo: Algo,
    values: Sequence[int],
    proviso: Proviso,
    *,
    mode: CheckMode = CheckMode.FULL,
    backend: MergeBackend = MergeBackend.REC,
    mutant: Optional[Mutant] = None,
    budget: int = SHRINK_BUDGET,
) -> Tuple[int, ...]:
    """Smallest input found that still fails with ``proviso``.

    Drops chunks of halving size first, then moves single values toward 0.
    """
    runs = 0

    def fails(candidate: List[int]) -> bool:
        nonlocal runs
        runs += 1
        v = run_case(algo, candidate, mode=mode, backend=backend, mutant=mutant)
        return v is not None and v.proviso is proviso

    current = list(values)
    chunk = max(1, len(current) // 2)
    while chunk >= 1 and runs < budget:
        i = 0
        while i < len(current) and runs < budget:
            candidate = current[:i] + current[i + chunk:]
            if fails(candidate):
                current = candidate
            else:
                i += chunk
        chunk //= 2

    improved = True
    while improved and runs < budget:
        improved = False
        for i in range(len(current)):
            for smaller in _toward_zero(current[i]):
                candidate = current[:i] + [smaller] + current[i + 1:]
                if fails(candidate):
                    current = candidate
                    improved = True
                    break
    return tuple(current)


def _run_index(settings: VerifySettings, index: int) -> List[Violation]:
    values = case_input(settings.seed, index, settings.max_len, settings.low, settings.high)
    found: List[Violation] = []
    for algo in settings.algos:
        violation = run_case(
            algo, values, mode=settings.mode, backend=settings.backend, mutant=settings.mutant
        )
        if violation is None:
            continue
        log.debug("case %d (%s): %s", index, algo.value, violation)
        shrunk = None
        if settings.shrink:
            shrunk = shrink(
                algo,
                values,
                violation.proviso,
                mode=settings.mode,
                backend=settings.backend,
                mutant=settings.mutant,
            )
        found.append(dataclasses.replace(violation, case_index=index, shrunk_input=shrunk))
    return found


def verify(settings: VerifySettings) -> VerificationReport:
    start = time.perf_counter()
    indices = range(settings.cases)
    if settings.workers > 1:
        # Each case owns its arrays and checker; map keeps case order.
        with ThreadPoolExecutor(max_workers=settings.workers) as pool:
            per_case = list(pool.map(lambda i: _run_index(settings, i), indices))
    else:
        per_case = [_run_index(settings, i) for i in indices]

    report = VerificationReport(
        cases_run=settings.cases * len(settings.algos),
        seed=settings.seed,
        violations=[v for case in per_case for v in case],
        elapsed=time.perf_counter() - start,
    )
    log.info(
        "verified %d runs (seed %d): %d violation(s) in %.2fs",
        report.cases_run,
        report.seed,
        len(report.violations),
        report.elapsed,
    )
    return report
