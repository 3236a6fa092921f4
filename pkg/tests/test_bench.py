from __future__ import annotations

import pytest
from pydantic import ValidationError

from dncsort.bench import bench, rows_document
from dncsort.config import Algo, BenchSettings, VerifySettings


def test_iter_row_respects_comparison_bound():
    rows = bench(BenchSettings(algos=[Algo.ITER], sizes=[1000], repeats=3))
    assert len(rows) == 1
    row = rows[0]
    assert row.algo == "iter" and row.n == 1000
    assert row.comparisons <= 1000 * 11
    assert row.median_seconds >= 0


def test_single_element_needs_no_comparisons():
    (row,) = bench(BenchSettings(algos=[Algo.ITER], sizes=[1], repeats=1))
    assert row.comparisons == 0


def test_two_elements_need_a_comparison():
    (row,) = bench(BenchSettings(algos=[Algo.REC], sizes=[2], repeats=1))
    assert row.comparisons >= 1


def test_rows_cover_every_algo_and_size():
    rows = bench(BenchSettings(sizes=[5, 10], repeats=1))
    assert [(r.algo, r.n) for r in rows] == [(a.value, n) for a in Algo for n in (5, 10)]
    doc = rows_document(rows)
    assert set(doc["rows"][0]) == {"algo", "n", "median_seconds", "comparisons"}


@pytest.mark.parametrize(
    "kwargs",
    [{"sizes": []}, {"sizes": [0]}, {"repeats": 0}, {"low": 3, "high": 1}, {"algos": []}],
)
def test_bench_settings_validation(kwargs):
    with pytest.raises(ValidationError):
        BenchSettings(**kwargs)


@pytest.mark.parametrize("kwargs", [{"cases": 0}, {"max_len": -1}, {"workers": 0}, {"low": 1, "high": 0}])
def test_verify_settings_validation(kwargs):
    with pytest.raises(ValidationError):
        VerifySettings(**kwargs)


def test_settings_defaults():
    v = VerifySettings()
    assert (v.cases, v.seed, v.max_len, v.low, v.high, v.workers, v.shrink) == (100, 0, 64, -5, 5, 1, True)
    assert v.algos == list(Algo)
    b = BenchSettings()
    assert (b.sizes, b.repeats, b.low, b.high) == ([1000], 3, -50, 50)
