from __future__ import annotations

import math
from itertools import combinations_with_replacement

import pytest
from hypothesis import given, strategies as st

from dncsort.algorithms.merge_rec import fp, fp_postcondition, merge_two, partition_point
from dncsort.contracts import Checker, CheckMode, ContractViolation, Proviso


def _sorted_arrays(domain, max_len):
    for n in range(max_len + 1):
        for combo in combinations_with_replacement(domain, n):
            yield list(combo)


@pytest.mark.parametrize(
    "x, b, l, r, expected",
    [(5, [1, 3, 5, 7], 0, 4, 2), (0, [1, 2, 3], 0, 3, 0), (4, [1, 2], 1, 1, 1), (9, [1, 2, 3], 0, 3, 3)],
)
def test_fp_examples(x, b, l, r, expected):
    assert fp(x, b, l, r, CheckMode.CONTRACTS) == expected


def test_fp_exhaustive_small_domain():
    domain = range(4)
    for b in _sorted_arrays(domain, 8):
        n = len(b)
        for x in domain:
            m, depth = partition_point(x, b, 0, n)
            assert fp_postcondition(x, b, 0, n, m), (x, b, m)
            assert depth <= math.ceil(math.log2(max(1, n))) + 1


def test_fp_unsorted_window_is_a_pre_violation():
    with pytest.raises(ContractViolation) as info:
        fp(1, [3, 2], 0, 2, CheckMode.CONTRACTS)
    assert info.value.violation.proviso is Proviso.PRE


def test_fp_leaves_input_alone():
    b = [1, 1, 2, 2, 3]
    m = fp(2, b, 0, 5, CheckMode.FULL)
    assert b == [1, 1, 2, 2, 3]
    assert fp_postcondition(2, b, 0, 5, m)


@pytest.mark.parametrize(
    "a, b, expected",
    [([], [1, 2], [1, 2]), ([1, 3], [2, 4], [1, 2, 3, 4]), ([5], [1, 9], [1, 5, 9]), ([], [], [])],
)
@pytest.mark.parametrize("mode", list(CheckMode))
def test_merge_two_examples(a, b, expected, mode):
    assert merge_two(a, 0, len(a), b, 0, len(b), mode) == expected


def test_merge_two_windows():
    a = [9, 1, 4, 0]
    b = [8, 2, 3, 7, 0]
    assert merge_two(a, 1, 3, b, 1, 4, CheckMode.FULL) == [1, 2, 3, 4, 7]
    assert a == [9, 1, 4, 0] and b == [8, 2, 3, 7, 0]


def test_merge_two_exhaustive():
    domain = range(3)
    arrays = list(_sorted_arrays(domain, 8))
    for a in arrays:
        for b in arrays:
            if len(a) + len(b) > 8:
                continue
            assert merge_two(a, 0, len(a), b, 0, len(b)) == sorted(a + b)


def test_merge_two_unsorted_input_is_a_pre_violation():
    with pytest.raises(ContractViolation) as info:
        merge_two([2, 1], 0, 2, [3], 0, 1, CheckMode.CONTRACTS)
    assert info.value.violation.proviso is Proviso.PRE


@given(st.lists(st.integers(-10, 10), max_size=20), st.lists(st.integers(-10, 10), max_size=20))
def test_merge_two_full_mode(a, b):
    a, b = sorted(a), sorted(b)
    assert merge_two(a, 0, len(a), b, 0, len(b), CheckMode.FULL) == sorted(a + b)


def test_merge_two_counts_comparisons():
    ck = Checker()
    merge_two([1, 3, 5], 0, 3, [2, 4, 6], 0, 3, ck)
    assert ck.comparisons > 0
