from __future__ import annotations

import math
from itertools import product

import pytest
from hypothesis import given, strategies as st

from dncsort.algorithms.msort_iter import (
    ALGO,
    copy,
    double_multiple_is_multiple,
    merge_iter,
    merge_pair,
    merge_sort_iter,
    merges,
    multiple_step_keeps_multiple,
    multiples_are_spaced,
    runs_sorted,
)
from dncsort.algorithms.msort_rec import merge_sort_rec
from dncsort.contracts import Checker, CheckMode, ContractViolation, Proviso
from dncsort.core import UsageError
from dncsort.trace import Phase, TraceRecorder, is_doubling


@pytest.mark.parametrize("a, expected", [([], []), ([5], [5]), ([3, 1], [1, 3]), ([2, 1, 4, 3], [1, 2, 3, 4])])
@pytest.mark.parametrize("mode", list(CheckMode))
def test_merge_sort_iter_examples(a, expected, mode):
    merge_sort_iter(a, mode)
    assert a == expected


@pytest.mark.parametrize(
    "a, s, expected",
    [([2, 1, 4, 3], 1, [1, 2, 3, 4]), ([1, 2, 3], 4, [1, 2, 3]), ([3, 1, 2], 1, [1, 3, 2])],
)
@pytest.mark.parametrize("mode", list(CheckMode))
def test_merges(a, s, expected, mode):
    merges(a, s, mode)
    assert a == expected


@pytest.mark.parametrize(
    "a, l, s, expected",
    [([2, 1, 4, 3], 0, 1, [1, 2, 4, 3]), ([1, 2, 9], 2, 1, [1, 2, 9]), ([1, 4, 2, 3], 0, 2, [1, 2, 3, 4])],
)
@pytest.mark.parametrize("mode", list(CheckMode))
def test_merge_pair(a, l, s, expected, mode):
    merge_pair(a, l, s, mode)
    assert a == expected


@pytest.mark.parametrize(
    "a, b, expected",
    [([], [], []), ([1, 3], [2], [1, 2, 3]), ([1, 1], [1], [1, 1, 1]), ([4], [], [4])],
)
@pytest.mark.parametrize("mode", list(CheckMode))
def test_merge_iter(a, b, expected, mode):
    c = [None] * (len(a) + len(b))
    merge_iter(a, b, c, mode)
    assert c == expected


def test_merge_iter_length_mismatch():
    with pytest.raises(UsageError):
        merge_iter([1], [2], [0])


def test_merge_iter_unsorted_input_is_a_pre_violation():
    with pytest.raises(ContractViolation) as info:
        merge_iter([2, 1], [], [0, 0], CheckMode.CONTRACTS)
    assert info.value.violation.proviso is Proviso.PRE


@pytest.mark.parametrize(
    "src, i, dest, j, length, expected",
    [([1, 2, 3], 0, [0, 0, 0], 0, 3, [1, 2, 3]), ([1, 2, 3], 1, [9, 9, 9], 0, 2, [2, 3, 9])],
)
@pytest.mark.parametrize("mode", list(CheckMode))
def test_copy(src, i, dest, j, length, expected, mode):
    copy(src, i, dest, j, length, mode)
    assert dest == expected


def test_copy_rejects_aliasing():
    a = [1]
    with pytest.raises(UsageError):
        copy(a, 0, a, 0, 1)
    with pytest.raises(UsageError):
        copy(a, 0, a, 0, 1, CheckMode.FULL)


def test_copy_out_of_range_is_a_pre_violation():
    with pytest.raises(ContractViolation) as info:
        copy([1, 2], 1, [0, 0], 0, 2, CheckMode.CONTRACTS)
    assert info.value.violation.proviso is Proviso.PRE


def test_runs_sorted():
    assert runs_sorted([2, 3, 1, 5, 0], 2)
    assert not runs_sorted([3, 2, 1, 5], 2)
    assert runs_sorted([3, 2, 1, 5], 2, 2)


@given(st.integers(0, 10_000), st.integers(0, 10_000), st.integers(1, 64))
def test_arithmetic_facts(j, l, s):
    assert double_multiple_is_multiple(j, s)
    assert multiples_are_spaced(j, l, 2 * s)
    assert multiple_step_keeps_multiple(j, 2 * s)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 8, 9, 100])
def test_pass_count_and_doubling(n):
    recorder = TraceRecorder(ALGO)
    merge_sort_iter(list(range(n, 0, -1)), Checker(trace=recorder))
    passes = recorder.count(Phase.LEVEL_PASS)
    assert passes == (math.ceil(math.log2(n)) if n >= 2 else 0)
    assert is_doubling(recorder.events)


@pytest.mark.parametrize("n", [1, 2, 10, 100, 1_000, 10_000])
def test_comparison_bound(n):
    ck = Checker()
    a = [(i * 7919) % 1_009 - 500 for i in range(n)]
    merge_sort_iter(a, ck)
    assert a == sorted(a)
    assert ck.comparisons <= n * (math.ceil(math.log2(n)) + 1)


def test_exhaustive_small_domain_matches_recursive():
    for n in range(8):
        for values in product(range(3), repeat=n):
            a, b = list(values), list(values)
            merge_sort_iter(a)
            merge_sort_rec(b)
            assert a == b == sorted(values)


@given(st.lists(st.integers(-50, 50), max_size=40))
def test_full_mode_agrees_with_sorted(values):
    a = list(values)
    merge_sort_iter(a, CheckMode.FULL)
    assert a == sorted(values)
