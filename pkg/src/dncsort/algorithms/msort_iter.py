"""Bottom-up merge sort.

Each pass merges consecutive sorted runs of length ``s`` into runs of length
``2s``; the last run of a pass may be shorter. ``s`` starts at 1 and doubles
until it covers the array. No recursion and no stack.

In full mode the loop invariants of ``merge_sort_iter``, ``merges`` and
``merge_iter`` are evaluated before each loop, after every iteration and at
exit.
"""
from __future__ import annotations

from typing import Any, List, MutableSequence, Optional, Sequence

from dncsort.contracts import Checker, CheckMode, Location, Proviso, as_checker
from dncsort.core import (
    SliceBounds,
    Snapshot,
    UsageError,
    is_perm,
    is_sorted,
    outside_unchanged,
    uniformly_leq,
)
from dncsort.mutants import Mutant
from dncsort.trace import Phase

ALGO = "msort_iter"


# ---- arithmetic facts the pass loop relies on --------------------------------------

def double_multiple_is_multiple(j: int, s: int) -> bool:
    """A multiple of 2s is a multiple of s."""
    return j % (2 * s) != 0 or j % s == 0


def multiples_are_spaced(j: int, l: int, width: int) -> bool:
    """Two ordered multiples of ``width`` are at least ``width`` apart."""
    if not (j % width == 0 and l % width == 0 and 0 <= l < j):
        return True
    return l + width <= j


def multiple_step_keeps_multiple(j: int, width: int) -> bool:
    """Stepping a multiple of ``width`` by ``width`` gives a multiple of ``width``."""
    return j % width != 0 or (j + width) % width == 0


def runs_sorted(a: Sequence[Any], width: int, start: int = 0, stop: Optional[int] = None) -> bool:
    """Every run ``a[l..min(l+width, n))`` with ``l`` a multiple of ``width`` in ``[start, stop)`` is sorted.

    ``start`` must itself be a multiple of ``width``.
    """
    n = len(a)
    stop = n if stop is None else stop
    return all(is_sorted(a[l:min(l + width, n)]) for l in range(start, min(stop, n), width))


# ---- copy and two-array merge ----------------------------------------------------------

def copy(
    src: Sequence[Any],
    i: int,
    dest: MutableSequence[Any],
    j: int,
    length: int,
    mode: CheckMode | Checker = CheckMode.UNCHECKED,
) -> None:
    """``dest[j..j+length) := src[i..i+length)``; ``src`` and ``dest`` must be distinct."""
    if src is dest:
        raise UsageError("copy needs distinct source and destination arrays")
    ck = as_checker(mode)
    where = Location(ALGO, "copy", j, j + length, len(dest))
    old_src = old_dest = None
    if ck.contracts:
        ck.ensure(
            0 <= i < len(src) and 0 <= j < len(dest) and 0 <= length
            and len(src) >= i + length and len(dest) >= j + length,
            Proviso.PRE,
            where,
            f"copy out of range (i={i}, j={j}, len={length})",
            dest,
        )
        old_src, old_dest = Snapshot.capture(src), Snapshot.capture(dest)

    dest[j:j + length] = src[i:i + length]

    if old_src is not None and old_dest is not None:
        ck.ensure(list(dest[j:j + length]) == list(src[i:i + length]), Proviso.POST, where,
                  "destination window differs from source window", dest, old_dest)
        ck.ensure(
            outside_unchanged(old_dest, dest, SliceBounds(j, j + length, len(dest)))
            and tuple(src) == old_src.elems,
            Proviso.NON_INTERFERENCE,
            where,
            "copy touched data outside its destination window",
            dest,
            old_dest,
        )


def merge_iter(
    a: Sequence[Any],
    b: Sequence[Any],
    c: MutableSequence[Any],
    mode: CheckMode | Checker = CheckMode.UNCHECKED,
) -> None:
    """Merge sorted ``a`` and sorted ``b`` into ``c`` (``len(c) == len(a) + len(b)``)."""
    if len(c) != len(a) + len(b):
        raise UsageError(f"result length {len(c)} != {len(a)} + {len(b)}")
    ck = as_checker(mode)
    where = Location(ALGO, "merge_iter", 0, len(c), len(c))
    old_a = old_b = old_c = None
    if ck.contracts:
        ck.ensure(is_sorted(a) and is_sorted(b), Proviso.PRE, where, "merge inputs must be sorted", c)
        old_a, old_b, old_c = Snapshot.capture(a), Snapshot.capture(b), Snapshot.capture(c)

    i = j = k = 0

    def holds() -> bool:
        written = c[:k]
        return (
            0 <= i <= len(a)
            and 0 <= j <= len(b)
            and k == i + j
            and is_sorted(written)
            and uniformly_leq(written, a[i:])
            and uniformly_leq(written, b[j:])
            and is_perm(written, list(a[:i]) + list(b[:j]))
            and old_a is not None and tuple(a) == old_a.elems
            and old_b is not None and tuple(b) == old_b.elems
        )

    def remaining() -> int:
        return len(a) - i + len(b) - j

    ck.invariant(holds, where, "merge loop invariant fails on entry", c, old_c)
    while i < len(a) and j < len(b):
        before = remaining()
        if ck.leq(a[i], b[j]):
            c[k] = a[i]
            i += 1
        else:
            c[k] = b[j]
            j += 1
        k += 1
        ck.loop_variant(before, remaining(), where, c)
        ck.invariant(holds, where, f"merge loop invariant fails at k={k}", c, old_c)

    if not ck.has(Mutant.MERGE_ITER_NO_DRAIN):
        while i < len(a):
            before = remaining()
            c[k] = a[i]
            i, k = i + 1, k + 1
            ck.loop_variant(before, remaining(), where, c)
            ck.invariant(holds, where, f"drain loop invariant fails at k={k}", c, old_c)
        while j < len(b):
            before = remaining()
            c[k] = b[j]
            j, k = j + 1, k + 1
            ck.loop_variant(before, remaining(), where, c)
            ck.invariant(holds, where, f"drain loop invariant fails at k={k}", c, old_c)

    if old_a is not None and old_b is not None and old_c is not None:
        # Permutation first: unfilled slots must not reach the order check.
        ck.ensure(is_perm(c, list(old_a) + list(old_b)) and is_sorted(c), Proviso.POST, where,
                  "merged result is not a sorted permutation of the inputs", c, old_c)
        ck.ensure(tuple(a) == old_a.elems and tuple(b) == old_b.elems,
                  Proviso.NON_INTERFERENCE, where, "merge modified an input", c, old_c)


# ---- one pass ------------------------------------------------------------------------

def merge_pair(
    a: MutableSequence[Any],
    l: int,
    s: int,
    mode: CheckMode | Checker = CheckMode.UNCHECKED,
) -> None:
    """Merge the sorted runs ``a[l..l+s)`` and ``a[l+s..l+2s)`` (clipped to ``len(a)``)."""
    ck = as_checker(mode)
    n = len(a)
    mid, hi = min(l + s, n), min(l + 2 * s, n)
    where = Location(ALGO, "merge_pair", l, hi, n)
    old = None
    if ck.contracts:
        ck.ensure(0 <= l < n and s >= 1 and is_sorted(a[l:mid]) and is_sorted(a[mid:hi]),
                  Proviso.PRE, where, f"merge_pair needs two sorted runs at l={l}, s={s}", a)
        old = Snapshot.capture(a)

    if l + s < n:
        s2 = min(s, n - (l + s))
        aa: List[Any] = [None] * s
        aa2: List[Any] = [None] * s2
        merged: List[Any] = [None] * (s + s2)
        copy(a, l, aa, 0, s, ck)
        copy(a, l + s, aa2, 0, s2, ck)
        merge_iter(aa, aa2, merged, ck)
        if not ck.has(Mutant.MERGE_PAIR_NO_COPY_BACK):
            copy(merged, 0, a, l, s + s2, ck)

    if old is not None:
        ck.ensure(is_sorted(a[l:hi]) and is_perm(a, old), Proviso.POST, where,
                  "merged run is not a sorted permutation", a, old)
        ck.ensure(outside_unchanged(old, a, SliceBounds(l, hi, n)), Proviso.NON_INTERFERENCE, where,
                  "merge_pair touched data outside its runs", a, old)


def merges(
    a: MutableSequence[Any],
    s: int,
    mode: CheckMode | Checker = CheckMode.UNCHECKED,
) -> None:
    """One pass: runs of length ``s`` become runs of length ``2s``."""
    ck = as_checker(mode)
    n = len(a)
    where = Location(ALGO, "merges", 0, n, n)
    old = None
    if ck.contracts:
        ck.ensure(n >= 1 and s >= 1 and runs_sorted(a, s), Proviso.PRE, where,
                  f"runs of length {s} are not sorted", a)
        old = Snapshot.capture(a)

    j = 0

    def holds() -> bool:
        return (
            0 <= j <= n
            and (j == n or j % (2 * s) == 0)
            and runs_sorted(a, 2 * s, 0, j)
            and runs_sorted(a, s, j, n)
            and old is not None
            and is_perm(a, old)
        )

    ck.invariant(holds, where, "pass invariant fails on entry", a, old)
    while j != n:
        merge_pair(a, j, s, ck)
        before = n - j
        j = min(j + 2 * s, n)
        ck.loop_variant(before, n - j, where, a)
        ck.invariant(holds, where, f"pass invariant fails at j={j}", a, old)

    if old is not None:
        ck.ensure(runs_sorted(a, 2 * s) and is_perm(a, old), Proviso.POST, where,
                  f"runs of length {2 * s} are not sorted after the pass", a, old)


# ---- driver ---------------------------------------------------------------------------

def _merge_sort_iter(a: MutableSequence[Any], ck: Checker) -> None:
    n = len(a)
    where = Location(ALGO, "merge_sort_iter", 0, n, n)
    old = Snapshot.capture(a) if ck.full else None
    s = 1
    level = 0

    def holds() -> bool:
        return s >= 1 and runs_sorted(a, s) and old is not None and is_perm(a, old)

    ck.invariant(holds, where, "level invariant fails on entry", a, old)
    while s < n:
        level += 1
        ck.emit(ALGO, Phase.LEVEL_PASS, 0, None, n, level, s)
        merges(a, s, ck)
        before = n - s
        s = 2 * s
        ck.loop_variant(before, n - s, where, a)
        ck.invariant(holds, where, f"level invariant fails at s={s}", a, old)

    # 0 is a multiple of s and s >= n: the run starting at 0 is the whole array.
    ck.invariant(lambda: s >= n and is_sorted(a[0:min(s, n)]), where,
                 "exit condition does not give a sorted array", a, old)


def merge_sort_iter(
    a: MutableSequence[Any],
    mode: CheckMode | Checker = CheckMode.UNCHECKED,
) -> None:
    """Sort ``a`` in place, bottom-up. Empty arrays are accepted and left alone."""
    if len(a) == 0:
        return
    ck = as_checker(mode)
    ck.triple(
        lambda s: len(s) >= 1,
        lambda s: _merge_sort_iter(s, ck),
        lambda old, s: is_sorted(s) and is_perm(s, old),
        a,
        Location(ALGO, "merge_sort_iter", 0, len(a), len(a)),
    )
