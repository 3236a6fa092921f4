"""Recursive merge sort as an instance of the simple schema.

Windows shorter than two are already sorted; longer ones split at
``(r + l) // 2`` and are merged back with ``merge_in_place``, whose backend is
either the recursive two-array merge or the iterative one.
"""
from __future__ import annotations

from typing import Any, Dict, List, MutableSequence

from dncsort.algorithms.merge_rec import merge_two
from dncsort.algorithms.msort_iter import merge_iter
from dncsort.config import MergeBackend
from dncsort.contracts import Checker, CheckMode, Location, Proviso, as_checker
from dncsort.core import SliceBounds, Snapshot, bounds_ok, is_perm, is_sorted, outside_unchanged
from dncsort.mutants import Mutant
from dncsort.schema import SimpleSchemaParts, drive_simple

ALGO = "msort_rec"


def merge_in_place(
    a: MutableSequence[Any],
    l: int,
    m: int,
    r: int,
    mode: CheckMode | Checker = CheckMode.UNCHECKED,
    *,
    backend: MergeBackend = MergeBackend.REC,
) -> None:
    """Merge sorted ``a[l..m)`` and sorted ``a[m..r)`` into ``a[l..r)``."""
    ck = as_checker(mode)
    n = len(a)
    where = Location(ALGO, "merge_in_place", l, r, n)
    old = None
    if ck.contracts:
        ck.ensure(0 <= l < m < r <= n and is_sorted(a[l:m]) and is_sorted(a[m:r]), Proviso.PRE,
                  where, f"merge_in_place needs sorted halves around m={m}", a)
        old = Snapshot.capture(a)

    if backend is MergeBackend.REC:
        merged: List[Any] = merge_two(a, l, m, a, m, r, ck)
    else:
        merged = [None] * (r - l)
        merge_iter(a[l:m], a[m:r], merged, ck)
    a[l:r] = merged

    if old is not None:
        ck.ensure(is_sorted(a[l:r]) and is_perm(a[l:r], old[l:r]), Proviso.POST, where,
                  "merged window is not a sorted permutation", a, old)
        ck.ensure(outside_unchanged(old, a, SliceBounds(l, r, n)), Proviso.NON_INTERFERENCE, where,
                  "merge touched data outside its window", a, old)


def _parts(backend: MergeBackend) -> SimpleSchemaParts:
    def combine(a: MutableSequence[Any], l: int, m: int, r: int, ck: Checker) -> None:
        if ck.has(Mutant.COMBINE_SKIP):
            return
        merge_in_place(a, l, m, r, ck, backend=backend)

    return SimpleSchemaParts(
        algo=ALGO,
        is_base=lambda l, r: r - l < 2,
        solve_base=lambda a, l, r, ck: None,
        divide=lambda a, l, r, ck: (r + l) // 2,
        combine=combine,
        q=lambda a, l, r: bounds_ok(l, r, len(a)),
        r_post=lambda old, a, l, r: is_sorted(a[l:r]) and is_perm(a[l:r], old[l:r]),
        p=lambda a, l, m, r: 0 <= l < m < r <= len(a),
        frame=lambda before, a, l, r: is_perm(a[l:r], before[l:r]),
    )


MERGE_SORT_PARTS: Dict[MergeBackend, SimpleSchemaParts] = {b: _parts(b) for b in MergeBackend}


def merge_sort_slice(
    a: MutableSequence[Any],
    l: int,
    r: int,
    mode: CheckMode | Checker = CheckMode.UNCHECKED,
    *,
    backend: MergeBackend = MergeBackend.REC,
) -> None:
    ck = as_checker(mode)
    if ck.contracts:
        ck.ensure(bounds_ok(l, r, len(a)), Proviso.PRE, Location(ALGO, "merge_sort_slice", l, r, len(a)),
                  "window out of range", a)
    bounds = SliceBounds(l, r, len(a))
    drive_simple(MERGE_SORT_PARTS[MergeBackend(backend)], a, bounds.l, bounds.r, ck)


def merge_sort_rec(
    a: MutableSequence[Any],
    mode: CheckMode | Checker = CheckMode.UNCHECKED,
    *,
    backend: MergeBackend = MergeBackend.REC,
) -> None:
    ck = as_checker(mode)
    ck.triple(
        lambda s: True,
        lambda s: merge_sort_slice(s, 0, len(s), ck, backend=backend),
        lambda old, s: is_sorted(s) and is_perm(s, old),
        a,
        Location(ALGO, "merge_sort_rec", 0, len(a), len(a)),
    )
