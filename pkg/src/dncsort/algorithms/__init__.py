from __future__ import annotations

from typing import Any, Callable, Dict, MutableSequence

from dncsort.config import Algo, MergeBackend
from dncsort.contracts import Checker, CheckMode

from . import merge_rec, msort_iter, msort_rec, quicksort
from .merge_rec import fp, merge_two, partition_point
from .msort_iter import copy, merge_iter, merge_pair, merge_sort_iter, merges
from .msort_rec import merge_in_place, merge_sort_rec, merge_sort_slice
from .quicksort import partition, quicksort as quicksort_array

__all__ = [
    "TRACE_NAMES",
    "copy",
    "fp",
    "merge_in_place",
    "merge_iter",
    "merge_pair",
    "merge_sort_iter",
    "merge_sort_rec",
    "merge_sort_slice",
    "merge_two",
    "merges",
    "partition",
    "partition_point",
    "quicksort_array",
    "sort_array",
]

Sorter = Callable[[MutableSequence[Any], Checker, MergeBackend], None]

_SORTERS: Dict[Algo, Sorter] = {
    Algo.REC: lambda a, ck, backend: merge_sort_rec(a, ck, backend=backend),
    Algo.ITER: lambda a, ck, backend: merge_sort_iter(a, ck),
    Algo.QUICK: lambda a, ck, backend: quicksort_array(a, ck),
}

# Name each algorithm records its own trace events under.
TRACE_NAMES: Dict[Algo, str] = {
    Algo.REC: msort_rec.ALGO,
    Algo.ITER: msort_iter.ALGO,
    Algo.QUICK: quicksort.ALGO,
}


def sort_array(
    algo: Algo,
    a: MutableSequence[Any],
    mode: CheckMode | Checker = CheckMode.UNCHECKED,
    backend: MergeBackend = MergeBackend.REC,
) -> Checker:
    """Sort ``a`` in place with ``algo``; returns the checker (comparison count, trace)."""
    ck = mode if isinstance(mode, Checker) else Checker(mode=CheckMode(mode))
    _SORTERS[Algo(algo)](a, ck, MergeBackend(backend))
    return ck
