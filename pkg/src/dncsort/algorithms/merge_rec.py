"""Recursive two-array merge built on the two-array schema.

The principal window ``a[l..r)`` is split at its midpoint ``m``; ``fp`` splits
the secondary window ``b[l2..r2)`` around ``a[m]``; the lesser and greater
parts are merged recursively and the result is ``d + [a[m]] + d2``.
Every call allocates a fresh result; the inputs are never modified.
"""
from __future__ import annotations

from typing import Any, List, Sequence, Tuple

from dncsort.contracts import Checker, CheckMode, Location, Proviso, as_checker
from dncsort.core import Snapshot, bounds_ok, is_perm, is_sorted, uniformly_leq
from dncsort.mutants import Mutant
from dncsort.schema import TwoArrayPartition, TwoArraySchemaParts, Windows, drive_two_array

ALGO = "merge_rec"


# ---- partition point -------------------------------------------------------------

def _fp(x: Any, b: Sequence[Any], l: int, r: int, ck: Checker, probes: int) -> Tuple[int, int]:
    if l == r:
        return l, probes
    p = (l + r) // 2
    if ck.eq(x, b[p]):
        return p, probes + 1
    if ck.lt(x, b[p]):
        return _fp(x, b, l, p, ck, probes + 1)
    return _fp(x, b, p + 1, r, ck, probes + 1)


def fp_postcondition(x: Any, b: Sequence[Any], l: int, r: int, m: int) -> bool:
    return (
        l <= m <= r
        and all(b[i] <= x for i in range(l, m))
        and all(x <= b[i] for i in range(m, r))
    )


def partition_point(
    x: Any,
    b: Sequence[Any],
    l: int,
    r: int,
    mode: CheckMode | Checker = CheckMode.UNCHECKED,
) -> Tuple[int, int]:
    """Return ``(m, depth)``: the split index and the number of recursive probes."""
    ck = as_checker(mode)
    where = Location(ALGO, "fp", l, r, len(b))
    old = None
    if ck.contracts:
        ck.ensure(bounds_ok(l, r, len(b)) and is_sorted(b[l:r]), Proviso.PRE, where,
                  "fp needs a sorted window inside b", b)
        old = Snapshot.capture(b)

    if ck.has(Mutant.FP_RETURNS_L):
        m, depth = l, 0
    else:
        m, depth = _fp(x, b, l, r, ck, 0)

    if old is not None:
        ck.ensure(fp_postcondition(x, b, l, r, m), Proviso.POST, where,
                  f"fp returned {m} for probe {x!r}", b, old)
        ck.ensure(tuple(b) == old.elems, Proviso.NON_INTERFERENCE, where, "fp modified b", b, old)
    return m, depth


def fp(
    x: Any,
    b: Sequence[Any],
    l: int,
    r: int,
    mode: CheckMode | Checker = CheckMode.UNCHECKED,
) -> int:
    """Index ``m`` in ``[l, r]`` with ``b[l..m) <= x <= b[m..r)`` for a sorted window."""
    return partition_point(x, b, l, r, mode)[0]


# ---- schema instance ------------------------------------------------------------------

def _copy_secondary(a: Sequence[Any], b: Sequence[Any], w: Windows, ck: Checker) -> List[Any]:
    return list(b[w.l2:w.r2])


def _copy_principal(a: Sequence[Any], b: Sequence[Any], w: Windows, ck: Checker) -> List[Any]:
    return list(a[w.l:w.r])


def _divide(a: Sequence[Any], b: Sequence[Any], w: Windows, ck: Checker) -> TwoArrayPartition:
    m = (w.l + w.r) // 2
    m2 = fp(a[m], b, w.l2, w.r2, ck)
    return TwoArrayPartition(m=m, l1=w.l2, r1=m2, l2=m2, r2=w.r2)


def _combine(
    a: Sequence[Any],
    b: Sequence[Any],
    w: Windows,
    part: TwoArrayPartition,
    d: List[Any],
    d2: List[Any],
    ck: Checker,
) -> List[Any]:
    pivot = a[part.m]
    if ck.full:
        where = Location(ALGO, "combine", w.l, w.r, len(a))
        ck.ensure(uniformly_leq(d, [pivot]) and uniformly_leq([pivot], d2),
                  Proviso.PARTITION_PREDICATE, where,
                  f"pivot {pivot!r} does not separate the merged halves", a)
    return d + [pivot] + d2


def _q(a: Sequence[Any], b: Sequence[Any], w: Windows) -> bool:
    return is_sorted(a[w.l:w.r]) and is_sorted(b[w.l2:w.r2])


def _r_post(old_a: Snapshot, old_b: Snapshot, w: Windows, c: List[Any]) -> bool:
    expected = list(old_a[w.l:w.r]) + list(old_b[w.l2:w.r2])
    return len(c) == len(expected) and is_sorted(c) and is_perm(expected, c)


def _p(a: Sequence[Any], b: Sequence[Any], w: Windows, part: TwoArrayPartition) -> bool:
    m = part.m
    pivot = a[m]
    return (
        w.l <= m < w.r
        and part.l1 == w.l2
        and part.r1 == part.l2
        and part.r2 == w.r2
        and w.l2 <= part.r1 <= w.r2
        and uniformly_leq(a[w.l:m], [pivot])
        and uniformly_leq([pivot], a[m + 1:w.r])
        and uniformly_leq(b[part.l1:part.r1], [pivot])
        and uniformly_leq([pivot], b[part.l2:part.r2])
    )


MERGE_PARTS = TwoArraySchemaParts(
    algo=ALGO,
    is_base=lambda l, r: r == l,
    is_base2=lambda l2, r2: r2 == l2,
    solve_base=_copy_secondary,
    solve_base2=_copy_principal,
    divide=_divide,
    combine=_combine,
    q=_q,
    r_post=_r_post,
    p=_p,
)


def merge_two(
    a: Sequence[Any],
    l: int,
    r: int,
    b: Sequence[Any],
    l2: int,
    r2: int,
    mode: CheckMode | Checker = CheckMode.UNCHECKED,
) -> List[Any]:
    """Merge sorted ``a[l..r)`` and sorted ``b[l2..r2)`` into a fresh list."""
    return drive_two_array(MERGE_PARTS, a, b, Windows(l, r, l2, r2), as_checker(mode))
