"""Element ordering, slice predicates and the sequence laws the algorithms rely on.

Elements only need a total order (``<=``) and, for the permutation relation,
hashing. The CLI instantiates them as signed 64-bit integers.
"""
from __future__ import annotations

import bisect
from collections import Counter
from dataclasses import dataclass
from typing import Any, Hashable, Iterator, Protocol, Sequence, TypeVar, overload


class UsageError(ValueError):
    """Misuse of an operation that is reported regardless of the check mode."""


class Ordered(Protocol):
    def __le__(self, other: Any, /) -> bool: ...
    def __lt__(self, other: Any, /) -> bool: ...


T = TypeVar("T", bound=Ordered)


@dataclass(frozen=True, slots=True)
class SliceBounds:
    """Half-open window ``[l, r)`` over an array of length ``n``."""
    l: int
    r: int
    n: int

    def __post_init__(self) -> None:
        if not bounds_ok(self.l, self.r, self.n):
            raise UsageError(f"invalid slice bounds l={self.l} r={self.r} n={self.n}")

    def length(self) -> int:
        return self.r - self.l

    def __str__(self) -> str:
        return f"[{self.l}..{self.r}) of {self.n}"


def bounds_ok(l: int, r: int, n: int) -> bool:
    return 0 <= l <= r <= n


@dataclass(frozen=True, slots=True)
class Snapshot:
    """Immutable copy of an array taken at call entry (the ``old(a)`` value)."""
    elems: tuple[Any, ...]

    @classmethod
    def capture(cls, a: Sequence[Any]) -> Snapshot:
        return cls(tuple(a))

    def __len__(self) -> int:
        return len(self.elems)

    @overload
    def __getitem__(self, i: int) -> Any: ...
    @overload
    def __getitem__(self, i: slice) -> tuple[Any, ...]: ...
    def __getitem__(self, i: int | slice) -> Any:
        return self.elems[i]

    def __iter__(self) -> Iterator[Any]:
        return iter(self.elems)


# ---- Predicates --------------------------------------------------------------

def is_sorted(s: Sequence[Any]) -> bool:
    """Non-strict ascending order, checked on adjacent pairs."""
    return all(s[i] <= s[i + 1] for i in range(len(s) - 1))


def is_perm(s: Sequence[Hashable], t: Sequence[Hashable]) -> bool:
    """Multiset equality."""
    if len(s) != len(t):
        return False
    return Counter(s) == Counter(t)


def outside_unchanged(before: Snapshot | Sequence[Any], after: Sequence[Any], b: SliceBounds) -> bool:
    """True iff ``after`` agrees with ``before`` on ``[0, l)`` and ``[r, n)``."""
    if len(before) != b.n or len(after) != b.n:
        raise UsageError(
            f"length mismatch: before={len(before)} after={len(after)} n={b.n}"
        )
    return all(before[i] == after[i] for i in range(b.l)) and all(
        before[i] == after[i] for i in range(b.r, b.n)
    )


def uniformly_leq(s: Sequence[Any], t: Sequence[Any]) -> bool:
    """Every element of ``s`` is ``<=`` every element of ``t``."""
    if not s or not t:
        return True
    return max(s) <= min(t)


# ---- Laws ----------------------------------------------------------------------
#
# Each law is an implication evaluated on concrete data; it returns True when the
# premise is false.

def sub_eq(u: Sequence[Any], v: Sequence[Any], p: int, q: int) -> bool:
    """Equal sequences have equal sub-slices."""
    if list(u) != list(v):
        return True
    return list(u[p:q]) == list(v[p:q])


def perm_sum(
    a: Sequence[Hashable], b: Sequence[Hashable], c: Sequence[Hashable], d: Sequence[Hashable]
) -> bool:
    """Permutation is preserved by concatenation."""
    if not (is_perm(a, b) and is_perm(c, d)):
        return True
    return is_perm(list(a) + list(c), list(b) + list(d))


def sub_sorted(s: Sequence[Any], p: int, q: int) -> bool:
    """Sortedness is preserved when taking sub-slices."""
    if not is_sorted(s):
        return True
    return is_sorted(s[p:q])


def perm_leqs(
    s: Sequence[Any], t: Sequence[Any], s2: Sequence[Any], t2: Sequence[Any]
) -> bool:
    """A uniform bound between two slices survives permuting either side."""
    if not (uniformly_leq(s, t) and is_perm(s, s2) and is_perm(t, t2)):
        return True
    return uniformly_leq(s2, t2)


def oracle_sort(s: Sequence[T]) -> list[T]:
    """Insertion sort used as the reference result."""
    out: list[T] = []
    for x in s:
        bisect.insort_right(out, x)
    return out
