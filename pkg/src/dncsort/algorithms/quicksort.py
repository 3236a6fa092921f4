"""Quicksort as an instance of the pivot schema; combining is a no-op."""
from __future__ import annotations

from typing import Any, MutableSequence, Sequence

from dncsort.contracts import Checker, CheckMode, Location, Proviso, as_checker
from dncsort.core import SliceBounds, Snapshot, bounds_ok, is_perm, is_sorted, outside_unchanged, uniformly_leq
from dncsort.mutants import Mutant
from dncsort.schema import PivotSchemaParts, drive_pivot

ALGO = "quicksort"


def is_partitioned(a: Sequence[Any], l: int, m: int, r: int) -> bool:
    """``a[l..m) <= a[m] <= a[m+1..r)``."""
    return (
        l <= m < r
        and uniformly_leq(a[l:m], [a[m]])
        and uniformly_leq([a[m]], a[m + 1:r])
    )


def partition(
    a: MutableSequence[Any],
    l: int,
    r: int,
    mode: CheckMode | Checker = CheckMode.UNCHECKED,
) -> int:
    """Partition ``a[l..r)`` around its first element and return the pivot's final index."""
    ck = as_checker(mode)
    n = len(a)
    where = Location(ALGO, "partition", l, r, n)
    old = None
    if ck.contracts:
        ck.ensure(0 <= l < r <= n and r - l >= 2, Proviso.PRE, where,
                  "partition needs a window of at least two elements", a)
        old = Snapshot.capture(a)

    if ck.has(Mutant.PARTITION_NO_EXCHANGE):
        m = l
    else:
        pivot = a[l]
        m = l
        for k in range(l + 1, r):
            if ck.lt(a[k], pivot):
                m += 1
                a[m], a[k] = a[k], a[m]
        a[l], a[m] = a[m], a[l]

    if old is not None:
        ck.ensure(is_partitioned(a, l, m, r) and is_perm(a[l:r], old[l:r]), Proviso.POST, where,
                  f"window is not partitioned around m={m}", a, old)
        ck.ensure(outside_unchanged(old, a, SliceBounds(l, r, n)), Proviso.NON_INTERFERENCE, where,
                  "partition touched data outside its window", a, old)
    return m


QUICKSORT_PARTS = PivotSchemaParts(
    algo=ALGO,
    is_base=lambda l, r: r - l < 2,
    solve_base=lambda a, l, r, ck: None,
    divide=lambda a, l, r, ck: partition(a, l, r, ck),
    combine=lambda a, l, m, r, ck: None,
    q=lambda a, l, r: bounds_ok(l, r, len(a)),
    r_post=lambda old, a, l, r: is_sorted(a[l:r]) and is_perm(a[l:r], old[l:r]),
    p=is_partitioned,
    frame=lambda before, a, l, r: is_perm(a[l:r], before[l:r]),
)


def quicksort(a: MutableSequence[Any], mode: CheckMode | Checker = CheckMode.UNCHECKED) -> None:
    ck = as_checker(mode)
    ck.triple(
        lambda s: True,
        lambda s: drive_pivot(QUICKSORT_PARTS, s, 0, len(s), ck),
        lambda old, s: is_sorted(s) and is_perm(s, old),
        a,
        Location(ALGO, "quicksort", 0, len(a), len(a)),
    )
