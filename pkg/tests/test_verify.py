"""性质验证套件"""

import dataclasses
import logging

import pytest

from reluctant.models.domain import AlgorithmId, SortOutcome
from reluctant.services import verify_service
from reluctant.sorts import SORTS
from reluctant.sorts.base import finish
from reluctant.sorts.expo_sort import expo_sort


def _by_suite(results):
    return {r.suite: r for r in results}


def unconditional_cube_sort(run, recorder) -> SortOutcome:
    """第二次递归不再受 if 约束的 CubeSort，也就是 ExpoSort"""
    return expo_sort(dataclasses.replace(run, algorithm=AlgorithmId.EXPO_SORT), recorder)


def lazy_insertion_sort(run, recorder) -> SortOutcome:
    recorder.record_invocation()
    return finish(list(run.input), recorder)


@pytest.fixture(scope="module")
def passing_results():
    return verify_service.verify(max_n=4, seed=1, random_inputs=10)


class TestCorrectBuild:

    def test_every_suite_passes(self, passing_results):
        assert [r.suite for r in passing_results] == list(verify_service.SUITES)
        assert verify_service.all_passed(passing_results)
        assert all(r.cases > 0 for r in passing_results)
        assert all(r.detail == "" for r in passing_results)

    def test_trace_suite_counts_permutations(self):
        results = _by_suite(verify_service.verify(max_n=3, random_inputs=0))
        assert results[verify_service.TRACE_EQUIVALENCE].cases == 1 + 2 + 6

    def test_table(self, passing_results):
        table = verify_service.format_table(passing_results)
        lines = table.splitlines()
        assert lines[0].split() == ["suite", "cases", "status", "detail"]
        assert len(lines) == 1 + len(verify_service.SUITES)
        assert all("PASS" in line for line in lines[1:])


class TestMutants:

    def test_unconditional_recursion_breaks_counts_not_traces(self):
        sorts = dict(SORTS)
        sorts[AlgorithmId.CUBE_SORT] = unconditional_cube_sort
        results = _by_suite(verify_service.verify(max_n=4, sorts=sorts, random_inputs=0))
        assert results[verify_service.TRACE_EQUIVALENCE].passed
        assert results[verify_service.MONOTONE_PROGRESS].passed
        assert not results[verify_service.COUNT_LAWS].passed
        assert not results[verify_service.ORACLE_AGREEMENT].passed
        assert not verify_service.all_passed(results.values())

    def test_non_sorting_build(self):
        sorts = dict(SORTS)
        sorts[AlgorithmId.INSERTION_SORT] = lazy_insertion_sort
        results = _by_suite(verify_service.verify(max_n=3, sorts=sorts, random_inputs=0))
        sortedness = results[verify_service.SORTEDNESS]
        assert not sortedness.passed
        assert "insertionsort" in sortedness.detail
        assert not results[verify_service.TRACE_EQUIVALENCE].passed

    def test_failure_rows_render(self):
        sorts = dict(SORTS)
        sorts[AlgorithmId.INSERTION_SORT] = lazy_insertion_sort
        table = verify_service.format_table(verify_service.verify(max_n=2, sorts=sorts, random_inputs=0))
        assert "FAIL" in table


def test_invalid_max_n():
    with pytest.raises(ValueError):
        verify_service.PropertyVerifier(max_n=0)


def test_inversions_touching_counts_each_pair_once():
    # (0,1) 与 (0,2)、(1,2) 都是逆序
    assert verify_service._inversions_touching([3, 2, 1], 0, 1) == 3


def test_invalid_random_expo_max_n():
    with pytest.raises(ValueError):
        verify_service.PropertyVerifier(max_n=3, random_expo_max_n=0)


def test_random_expo_max_n_overrides_settings():
    verifier = verify_service.PropertyVerifier(max_n=3, random_inputs=4, random_expo_max_n=6)
    assert verifier.random_expo_max_n == 6
    assert verify_service.all_passed(verifier.run())


def test_budget_safety_stays_quiet(caplog):
    # 套件有意触发的预算耗尽不算警告
    with caplog.at_level(logging.INFO, logger="reluctant"):
        results = _by_suite(verify_service.verify(max_n=3, random_inputs=0))
    assert results[verify_service.BUDGET_SAFETY].passed
    assert results[verify_service.BUDGET_SAFETY].cases > 0
    assert not [r for r in caplog.records if r.levelno >= logging.WARNING]
