from __future__ import annotations

import pytest

from dncsort.config import Algo, MergeBackend, VerifySettings
from dncsort.contracts import CheckMode, Proviso
from dncsort.mutants import Mutant
from dncsort.seeded import SeededRandom, case_input
from dncsort.verify import run_case, shrink, verify

# Which algorithm (and merge backend) reaches each injected defect.
MUTANT_TARGETS = [
    (Mutant.COMBINE_SKIP, Algo.REC, MergeBackend.REC),
    (Mutant.FP_RETURNS_L, Algo.REC, MergeBackend.REC),
    (Mutant.MERGE_ITER_NO_DRAIN, Algo.ITER, MergeBackend.REC),
    (Mutant.MERGE_ITER_NO_DRAIN, Algo.REC, MergeBackend.ITER),
    (Mutant.MERGE_PAIR_NO_COPY_BACK, Algo.ITER, MergeBackend.REC),
    (Mutant.PARTITION_NO_EXCHANGE, Algo.QUICK, MergeBackend.REC),
]


def test_case_inputs_are_reproducible():
    assert case_input(42, 3, 16, -5, 5) == case_input(42, 3, 16, -5, 5)
    gen = SeededRandom(7)
    first = gen.derive(1).int_list(5, 0, 100)
    gen.int(0, 10)
    assert gen.derive(1).int_list(5, 0, 100) == first


def test_generated_values_stay_in_domain():
    for i in range(50):
        values = case_input(1, i, 10, -2, 2)
        assert len(values) <= 10
        assert all(-2 <= v <= 2 for v in values)


def test_clean_campaign():
    report = verify(VerifySettings(cases=30, seed=42, max_len=24))
    assert report.ok
    assert report.cases_run == 30 * len(Algo)


def test_empty_arrays_only():
    report = verify(VerifySettings(cases=1, max_len=0))
    assert report.ok and report.cases_run == 3


def test_workers_give_same_report():
    serial = verify(VerifySettings(cases=20, seed=5, max_len=12, mutant=Mutant.COMBINE_SKIP, shrink=False))
    threaded = verify(
        VerifySettings(cases=20, seed=5, max_len=12, mutant=Mutant.COMBINE_SKIP, shrink=False, workers=4)
    )
    assert [v.to_dict() for v in serial.violations] == [v.to_dict() for v in threaded.violations]


@pytest.mark.parametrize("mutant, algo, backend", MUTANT_TARGETS)
def test_mutants_are_detected(mutant, algo, backend):
    report = verify(
        VerifySettings(algos=[algo], backend=backend, cases=50, max_len=16, mutant=mutant, shrink=False)
    )
    assert not report.ok
    assert all(v.case_index is not None for v in report.violations)


def test_mutant_free_algorithms_are_unaffected():
    # partition is only reached by quicksort.
    report = verify(
        VerifySettings(algos=[Algo.REC, Algo.ITER], cases=20, max_len=16, mutant=Mutant.PARTITION_NO_EXCHANGE)
    )
    assert report.ok


def test_run_case_reports_oracle_mismatch_in_unchecked_mode():
    v = run_case(Algo.REC, [2, 1], mode=CheckMode.UNCHECKED, mutant=Mutant.COMBINE_SKIP)
    assert v is not None
    assert v.proviso is Proviso.POST
    assert v.location.op == "oracle"


def test_shrink_finds_two_element_counterexample():
    values = [4, -3, 5, 0, 2, -1, 3, 3, -5]
    v = run_case(Algo.REC, values, mutant=Mutant.COMBINE_SKIP)
    assert v is not None
    shrunk = shrink(Algo.REC, values, v.proviso, mutant=Mutant.COMBINE_SKIP)
    assert len(shrunk) == 2
    assert shrunk[0] > shrunk[1]


def test_report_carries_shrunk_input():
    report = verify(
        VerifySettings(algos=[Algo.QUICK], cases=10, max_len=12, mutant=Mutant.PARTITION_NO_EXCHANGE)
    )
    assert report.violations
    for v in report.violations:
        assert v.shrunk_input is not None
        assert len(v.shrunk_input) <= len(v.before)


def test_deep_quicksort_recursion_with_workers():
    # Constant arrays drive quicksort to recursion depth n in every worker at once.
    settings = dict(algos=[Algo.QUICK], cases=8, seed=3, max_len=1500, low=0, high=0,
                    mode=CheckMode.UNCHECKED, shrink=False)
    assert verify(VerifySettings(**settings, workers=1)).ok
    assert verify(VerifySettings(**settings, workers=4)).ok
