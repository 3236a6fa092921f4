"""Generic binary divide-and-conquer drivers.

Three shapes are supported:

* simple: ``if B then E else D; M(l, m); M(m, r); C``
* pivot: as simple, but the recursive calls are on ``[l, m)`` and ``[m+1, r)``
* two-array: a principal window of ``a`` is split around a pivot, which in
  turn splits a secondary window of ``b``; the result is a fresh sequence

The drivers check the instance's provisos as the check mode dictates:
contracts mode checks Q, R and non-interference at every node; full mode adds
the base-length proviso, the partition predicate, its re-establishment of Q on
both children, its preservation across each child call, and strict decrease
of the variant ``r - l``.

``drive_*`` functions raise ``ContractViolation``; ``run_*`` return the
``Violation`` instead.
"""
from __future__ import annotations

import sys
import threading
from contextlib import contextmanager
from dataclasses import dataclass
from typing import Any, Callable, Iterator, List, MutableSequence, NamedTuple, Optional, Sequence

from dncsort.contracts import (
    Checker,
    CheckMode,
    ContractViolation,
    Location,
    Proviso,
    Violation,
    as_checker,
)
from dncsort.core import SliceBounds, Snapshot, UsageError, bounds_ok, outside_unchanged
from dncsort.trace import Phase

Array = MutableSequence[Any]


@dataclass(frozen=True, slots=True)
class SimpleSchemaParts:
    algo: str
    is_base: Callable[[int, int], bool]
    solve_base: Callable[[Array, int, int, Checker], None]
    divide: Callable[[Array, int, int, Checker], int]
    combine: Callable[[Array, int, int, int, Checker], None]
    q: Callable[[Sequence[Any], int, int], bool]
    r_post: Callable[[Snapshot, Sequence[Any], int, int], bool]
    p: Callable[[Sequence[Any], int, int, int], bool]
    # Extra fact about [l, r) that each child call must preserve (full mode).
    frame: Optional[Callable[[Snapshot, Sequence[Any], int, int], bool]] = None


@dataclass(frozen=True, slots=True)
class PivotSchemaParts(SimpleSchemaParts):
    """Same callbacks; ``divide`` yields a pivot index excluded from both children."""


class Windows(NamedTuple):
    """Principal window ``a[l..r)`` and secondary window ``b[l2..r2)``."""
    l: int
    r: int
    l2: int
    r2: int


@dataclass(frozen=True, slots=True)
class TwoArrayPartition:
    m: int
    l1: int
    r1: int
    l2: int
    r2: int

    def left(self, w: Windows) -> Windows:
        return Windows(w.l, self.m, self.l1, self.r1)

    def right(self, w: Windows) -> Windows:
        return Windows(self.m + 1, w.r, self.l2, self.r2)


@dataclass(frozen=True, slots=True)
class TwoArraySchemaParts:
    algo: str
    is_base: Callable[[int, int], bool]
    is_base2: Callable[[int, int], bool]
    solve_base: Callable[[Sequence[Any], Sequence[Any], Windows, Checker], List[Any]]
    solve_base2: Callable[[Sequence[Any], Sequence[Any], Windows, Checker], List[Any]]
    divide: Callable[[Sequence[Any], Sequence[Any], Windows, Checker], TwoArrayPartition]
    combine: Callable[
        [Sequence[Any], Sequence[Any], Windows, TwoArrayPartition, List[Any], List[Any], Checker],
        List[Any],
    ]
    q: Callable[[Sequence[Any], Sequence[Any], Windows], bool]
    r_post: Callable[[Snapshot, Snapshot, Windows, List[Any]], bool]
    p: Callable[[Sequence[Any], Sequence[Any], Windows, TwoArrayPartition], bool]


_headroom_lock = threading.Lock()
_headroom_users = 0
_headroom_saved = 0


@contextmanager
def recursion_headroom(depth: int) -> Iterator[None]:
    """Make room for ``depth`` extra Python frames (pivot recursion is linear in the worst case).

    The interpreter limit is process-wide: concurrent holders share one raise, and the
    original limit comes back only when the last holder leaves.
    """
    global _headroom_users, _headroom_saved
    with _headroom_lock:
        if _headroom_users == 0:
            _headroom_saved = sys.getrecursionlimit()
        _headroom_users += 1
        needed = depth + 1000
        if needed > sys.getrecursionlimit():
            sys.setrecursionlimit(needed)
    try:
        yield
    finally:
        with _headroom_lock:
            _headroom_users -= 1
            if _headroom_users == 0:
                sys.setrecursionlimit(_headroom_saved)


# ---- simple and pivot -----------------------------------------------------------

def _check_entry(parts: SimpleSchemaParts, a: Array, where: Location, ck: Checker) -> Snapshot:
    l, r = where.l or 0, where.r or 0
    ck.ensure(bounds_ok(l, r, len(a)), Proviso.PRE, where, "window out of range", a)
    ck.ensure(parts.q(a, l, r), Proviso.PRE, where, "Q does not hold on entry", a)
    return Snapshot.capture(a)


def _check_exit(parts: SimpleSchemaParts, a: Array, where: Location, old: Snapshot, ck: Checker) -> None:
    l, r = where.l or 0, where.r or 0
    ck.ensure(parts.r_post(old, a, l, r), Proviso.POST, where, "R does not hold on exit", a, old)
    ck.ensure(
        outside_unchanged(old, a, SliceBounds(l, r, len(old))),
        Proviso.NON_INTERFERENCE,
        where,
        "array changed outside the window",
        a,
        old,
    )


def _check_after_child(
    parts: SimpleSchemaParts,
    a: Array,
    node: tuple[int, int, int],
    at_divide: tuple[int, int, int],
    old: Snapshot,
    before_child: Snapshot,
    where: Location,
    ck: Checker,
) -> None:
    l, m, r = node
    ck.ensure(node == at_divide, Proviso.PARTITION_PREDICATE, where, "l, m, r changed", a, before_child)
    ck.ensure(parts.p(a, l, m, r), Proviso.PARTITION_PREDICATE, where,
              "P not preserved across a child call", a, before_child)
    ck.ensure(
        outside_unchanged(old, a, SliceBounds(l, r, len(old))),
        Proviso.NON_INTERFERENCE,
        where,
        "child call changed the array outside the parent window",
        a,
        old,
    )
    if parts.frame is not None:
        ck.ensure(parts.frame(before_child, a, l, r), Proviso.POST, where,
                  "child call broke the window frame condition", a, before_child)


def _simple(parts: SimpleSchemaParts, a: Array, l: int, r: int, ck: Checker, depth: int) -> None:
    where = Location(parts.algo, "node", l, r, len(a), depth)
    old = _check_entry(parts, a, where, ck) if ck.contracts else None

    if parts.is_base(l, r):
        ck.emit(parts.algo, Phase.BASE, l, None, r, depth)
        parts.solve_base(a, l, r, ck)
    else:
        if ck.full:
            ck.ensure(r - l > 1, Proviso.BASE_IMPLIES_SHORT, where, "non-base window shorter than 2", a)
        m = parts.divide(a, l, r, ck)
        ck.emit(parts.algo, Phase.DIVIDE, l, m, r, depth)
        if ck.full:
            ck.ensure(l < m < r and parts.p(a, l, m, r), Proviso.PARTITION_PREDICATE, where,
                      f"P does not hold after divide (m={m})", a)
            ck.ensure(parts.q(a, l, m) and parts.q(a, m, r), Proviso.PARTITION_PREDICATE, where,
                      "P does not establish Q on both children", a)
            ck.variant(r - l, m - l, where, a)
            ck.variant(r - l, r - m, where, a)
        node = (l, m, r)
        for cl, cr in ((l, m), (m, r)):
            before_child = Snapshot.capture(a) if ck.full else None
            _simple(parts, a, cl, cr, ck, depth + 1)
            if ck.full and old is not None and before_child is not None:
                _check_after_child(parts, a, (l, m, r), node, old, before_child, where, ck)
        parts.combine(a, l, m, r, ck)
        ck.emit(parts.algo, Phase.COMBINE, l, m, r, depth)

    if old is not None:
        _check_exit(parts, a, where, old, ck)


def _pivot(parts: SimpleSchemaParts, a: Array, l: int, r: int, ck: Checker, depth: int) -> None:
    where = Location(parts.algo, "node", l, r, len(a), depth)
    old = _check_entry(parts, a, where, ck) if ck.contracts else None

    if parts.is_base(l, r):
        ck.emit(parts.algo, Phase.BASE, l, None, r, depth)
        parts.solve_base(a, l, r, ck)
    else:
        if ck.full:
            ck.ensure(r - l > 0, Proviso.BASE_IMPLIES_SHORT, where, "non-base window is empty", a)
        m = parts.divide(a, l, r, ck)
        ck.emit(parts.algo, Phase.DIVIDE, l, m, r, depth)
        if ck.full:
            ck.ensure(l <= m < r and parts.p(a, l, m, r), Proviso.PARTITION_PREDICATE, where,
                      f"P does not hold after divide (m={m})", a)
            ck.ensure(parts.q(a, l, m) and parts.q(a, m + 1, r), Proviso.PARTITION_PREDICATE, where,
                      "P does not establish Q on both children", a)
            ck.variant(r - l, m - l, where, a)
            ck.variant(r - l, r - (m + 1), where, a)
        node = (l, m, r)
        for cl, cr in ((l, m), (m + 1, r)):
            before_child = Snapshot.capture(a) if ck.full else None
            _pivot(parts, a, cl, cr, ck, depth + 1)
            if ck.full and old is not None and before_child is not None:
                _check_after_child(parts, a, (l, m, r), node, old, before_child, where, ck)
        parts.combine(a, l, m, r, ck)
        ck.emit(parts.algo, Phase.COMBINE, l, m, r, depth)

    if old is not None:
        _check_exit(parts, a, where, old, ck)


def drive_simple(parts: SimpleSchemaParts, a: Array, l: int, r: int, ck: Checker) -> None:
    _simple(parts, a, l, r, ck, 0)


def drive_pivot(parts: SimpleSchemaParts, a: Array, l: int, r: int, ck: Checker) -> None:
    with recursion_headroom(r - l):
        _pivot(parts, a, l, r, ck, 0)


def run_simple(
    parts: SimpleSchemaParts,
    array: Array,
    b: SliceBounds,
    mode: CheckMode | Checker = CheckMode.UNCHECKED,
) -> Optional[Violation]:
    try:
        drive_simple(parts, array, b.l, b.r, as_checker(mode))
    except ContractViolation as exc:
        return exc.violation
    return None


def run_pivot(
    parts: SimpleSchemaParts,
    array: Array,
    b: SliceBounds,
    mode: CheckMode | Checker = CheckMode.UNCHECKED,
) -> Optional[Violation]:
    try:
        drive_pivot(parts, array, b.l, b.r, as_checker(mode))
    except ContractViolation as exc:
        return exc.violation
    return None


# ---- two arrays -------------------------------------------------------------------

def _windows_ok(w: Windows, na: int, nb: int) -> bool:
    return bounds_ok(w.l, w.r, na) and bounds_ok(w.l2, w.r2, nb)


def _two(
    parts: TwoArraySchemaParts,
    a: Sequence[Any],
    b: Sequence[Any],
    w: Windows,
    ck: Checker,
    depth: int,
) -> List[Any]:
    where = Location(parts.algo, "node", w.l, w.r, len(a), depth)
    old_a = old_b = None
    if ck.contracts:
        ck.ensure(_windows_ok(w, len(a), len(b)) and parts.q(a, b, w), Proviso.PRE, where,
                  f"Q does not hold on entry {w}", a)
        old_a, old_b = Snapshot.capture(a), Snapshot.capture(b)

    if parts.is_base(w.l, w.r):
        ck.emit(parts.algo, Phase.BASE, w.l, None, w.r, depth)
        c = parts.solve_base(a, b, w, ck)
    elif parts.is_base2(w.l2, w.r2):
        ck.emit(parts.algo, Phase.BASE, w.l, None, w.r, depth)
        c = parts.solve_base2(a, b, w, ck)
    else:
        if ck.full:
            ck.ensure(w.r - w.l > 0, Proviso.BASE_IMPLIES_SHORT, where, "non-base window is empty", a)
        part = parts.divide(a, b, w, ck)
        ck.emit(parts.algo, Phase.DIVIDE, w.l, part.m, w.r, depth)
        left, right = part.left(w), part.right(w)
        if ck.full:
            ck.ensure(w.l <= part.m < w.r and parts.p(a, b, w, part), Proviso.PARTITION_PREDICATE,
                      where, f"P does not hold after divide {part}", a)
            ck.ensure(
                _windows_ok(left, len(a), len(b)) and _windows_ok(right, len(a), len(b))
                and parts.q(a, b, left) and parts.q(a, b, right),
                Proviso.PARTITION_PREDICATE,
                where,
                "P does not establish Q on both children",
                a,
            )
            ck.variant(w.r - w.l, left.r - left.l, where, a)
            ck.variant(w.r - w.l, right.r - right.l, where, a)
        node = (w, part)
        results: List[List[Any]] = []
        for child in (left, right):
            results.append(_two(parts, a, b, child, ck, depth + 1))
            if ck.full and old_a is not None and old_b is not None:
                # All six window parameters stay fixed and P keeps holding.
                ck.ensure(node == (w, part) and parts.p(a, b, w, part), Proviso.PARTITION_PREDICATE,
                          where, "P not preserved across a child call", a, old_a)
                ck.ensure(tuple(a) == old_a.elems and tuple(b) == old_b.elems,
                          Proviso.NON_INTERFERENCE, where, "child call modified an input", a, old_a)
        d, d2 = results
        c = parts.combine(a, b, w, part, d, d2, ck)
        ck.emit(parts.algo, Phase.COMBINE, w.l, part.m, w.r, depth)

    if old_a is not None and old_b is not None:
        ck.ensure(parts.r_post(old_a, old_b, w, c), Proviso.POST, where,
                  f"R does not hold on exit (result {c})", a, old_a)
        ck.ensure(tuple(a) == old_a.elems and tuple(b) == old_b.elems,
                  Proviso.NON_INTERFERENCE, where, "an input array was modified", a, old_a)
    return c


def drive_two_array(
    parts: TwoArraySchemaParts,
    a: Sequence[Any],
    b: Sequence[Any],
    w: Windows,
    ck: Checker,
) -> List[Any]:
    return _two(parts, a, b, w, ck, 0)


def run_two_array(
    parts: TwoArraySchemaParts,
    a: Sequence[Any],
    b: Sequence[Any],
    wa: SliceBounds,
    wb: SliceBounds,
    mode: CheckMode | Checker = CheckMode.UNCHECKED,
) -> List[Any] | Violation:
    if wa.n != len(a) or wb.n != len(b):
        raise UsageError("window lengths do not match the arrays")
    try:
        return drive_two_array(parts, a, b, Windows(wa.l, wa.r, wb.l, wb.r), as_checker(mode))
    except ContractViolation as exc:
        return exc.violation
