"""性质验证服务

对小规模输入做穷举，对中等规模做随机抽样，逐条检查排序契约、计数律、
轨迹等价、单调进展、真值一致性与预算安全。排序实现可以注入，
以便验证变体（例如把 CubeSort 改回无条件递归）。
"""

import math
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

import numpy as np
import pandas as pd
from tqdm import tqdm

from reluctant.core.config import settings
from reluctant.core.exceptions import BudgetExceeded, InconsistentTrace
from reluctant.core.logging import logger
from reluctant.instrumentation.recorder import replay
from reluctant.models.domain import AlgorithmId, CountCase, SortOutcome, SortRun, SuiteResult, SwapTrace
from reluctant.models.schemas import SuiteResultSchema
from reluctant.services import oracle
from reluctant.services.bench_service import make_input
from reluctant.services.growth_service import closed_form
from reluctant.sorts.base import SortFunction
from reluctant.sorts.dispatch import ADJACENT_SWAP_SORTS, SORTS, run_sort

SORTEDNESS = "sortedness"
COUNT_LAWS = "count-laws"
TRACE_EQUIVALENCE = "trace-equivalence"
MONOTONE_PROGRESS = "monotone-progress"
TIES = "ties"
ORACLE_AGREEMENT = "oracle-agreement"
BUDGET_SAFETY = "budget-safety"

SUITES = (
    SORTEDNESS,
    COUNT_LAWS,
    TRACE_EQUIVALENCE,
    MONOTONE_PROGRESS,
    TIES,
    ORACLE_AGREEMENT,
    BUDGET_SAFETY,
)

# 详情列最多列出的失败条目
MAX_REPORTED_FAILURES = 3

TIE_ALPHABET = (1, 2, 3)

# 与递推表逐项核对的 (算法, 形态)；规模取 1..2K
_ORACLE_CASES: Tuple[Tuple[AlgorithmId, CountCase], ...] = (
    (AlgorithmId.EXPO_SORT, CountCase.REVERSE),
    (AlgorithmId.CUBE_SORT, CountCase.SORTED),
    (AlgorithmId.CUBE_SORT, CountCase.MIN_LAST),
    (AlgorithmId.CUBE_SORT, CountCase.REVERSE),
    (AlgorithmId.INSERTION_SORT, CountCase.SORTED),
    (AlgorithmId.INSERTION_SORT, CountCase.MIN_LAST),
    (AlgorithmId.INSERTION_SORT, CountCase.REVERSE),
    (AlgorithmId.STOOGE_SORT, CountCase.REVERSE),
    (AlgorithmId.STOOGE_SORT, CountCase.RANDOM),
    (AlgorithmId.SLOW_SORT, CountCase.REVERSE),
    (AlgorithmId.SLOW_SORT, CountCase.RANDOM),
)

# 闭式解与递推表互相核对的规模
_CLOSED_FORM_MAX_N = 200


def _inversions_touching(a: Sequence[int], i: int, j: int) -> int:
    """涉及位置 i 或 j 的逆序对数"""
    total = 0
    for p in (i, j):
        for q in range(len(a)):
            if q == p or (p == j and q == i):
                continue
            lo, hi = (p, q) if p < q else (q, p)
            if a[lo] > a[hi]:
                total += 1
    return total


class PropertyVerifier:
    """性质验证器

    Args:
        max_n: 穷举的最大规模 K（缺省 settings.verify_max_n）
        sorts: 算法表，可替换为变体
        seed: 随机输入与 BogoSort 的种子
        random_inputs: 随机输入个数
        random_expo_max_n: 随机输入交给 ExpoSort 时截取的最大规模
    """

    def __init__(
        self,
        max_n: Optional[int] = None,
        sorts: Mapping[AlgorithmId, SortFunction] = SORTS,
        seed: Optional[int] = None,
        random_inputs: Optional[int] = None,
        random_expo_max_n: Optional[int] = None,
    ):
        self.max_n = settings.verify_max_n if max_n is None else max_n
        if self.max_n < 1:
            raise ValueError(f"max_n must be >= 1, got {self.max_n}")
        self.sorts = sorts
        self.seed = settings.seed if seed is None else seed
        self.random_inputs = settings.verify_random_inputs if random_inputs is None else random_inputs
        self.random_expo_max_n = (settings.verify_random_expo_max_n
                                  if random_expo_max_n is None else random_expo_max_n)
        if self.random_expo_max_n < 1:
            raise ValueError(f"random_expo_max_n must be >= 1, got {self.random_expo_max_n}")
        self.results: Dict[str, SuiteResult] = {}

    # ------------------------------------------------------------------
    # 结果记录
    # ------------------------------------------------------------------

    def _check(self, suite: str, ok: bool, message: str = "") -> bool:
        result = self.results[suite]
        result.cases += 1
        if not ok:
            result.passed = False
            result.failures.append(message)
        return ok

    def _run(self, algorithm: AlgorithmId, values: Sequence[int]) -> Optional[SortOutcome]:
        run = SortRun(input=tuple(values), algorithm=algorithm, seed=self.seed)
        try:
            return run_sort(run, self.sorts)
        except Exception as e:
            logger.error(f"{algorithm.value} 在 {list(values)} 上失败: {e}")
            self._check(SORTEDNESS, False, f"{algorithm.value} {list(values)}: {e}")
            return None

    # ------------------------------------------------------------------
    # 单输入检查
    # ------------------------------------------------------------------

    def _check_contract(self, algorithm: AlgorithmId, values: Sequence[int], outcome: SortOutcome) -> None:
        label = f"{algorithm.value} {list(values)}"
        self._check(SORTEDNESS, oracle.is_sorted(outcome.output), f"{label}: output not sorted")
        self._check(SORTEDNESS, oracle.is_permutation_of(outcome.output, values),
                    f"{label}: output is not a permutation of the input")
        self._check(SORTEDNESS, len(outcome.trace) == outcome.counters.swaps,
                    f"{label}: trace length {len(outcome.trace)} != swaps {outcome.counters.swaps}")
        # BogoSort 的置乱不进入轨迹
        if algorithm is AlgorithmId.BOGO_SORT:
            return
        try:
            replayed = replay(outcome.trace, values)
        except InconsistentTrace as e:
            self._check(SORTEDNESS, False, f"{label}: {e}")
            return
        self._check(SORTEDNESS, replayed == tuple(outcome.output), f"{label}: replay disagrees with output")

    def _check_progress(self, algorithm: AlgorithmId, values: Sequence[int], trace: SwapTrace) -> None:
        label = f"{algorithm.value} {list(values)}"
        ok = len(trace) == oracle.inversion_count(values)
        a = list(values)
        for event in trace:
            if not ok:
                break
            i, j = event.left - 1, event.right - 1
            if not (0 <= i < j < len(a)):
                ok = False
                break
            before = _inversions_touching(a, i, j)
            a[i], a[j] = a[j], a[i]
            ok = _inversions_touching(a, i, j) == before - 1
        self._check(MONOTONE_PROGRESS, ok, f"{label}: swaps do not remove one inversion each")

    def _check_counts(self, values: Sequence[int], outcomes: Dict[AlgorithmId, SortOutcome]) -> None:
        n = len(values)
        expo = outcomes.get(AlgorithmId.EXPO_SORT)
        if expo is not None:
            expected = 2 ** (n - 1) - 1 if n >= 1 else 0
            self._check(COUNT_LAWS, expo.counters.comparisons == expected,
                        f"exposort {list(values)}: {expo.counters.comparisons} comparisons, expected {expected}")
            if n >= 1:
                self._check(COUNT_LAWS, expo.counters.invocations == 2 ** n - 1,
                            f"exposort {list(values)}: {expo.counters.invocations} invocations, "
                            f"expected {2 ** n - 1}")

        shape = self._shape(values)
        for algorithm in (AlgorithmId.CUBE_SORT, AlgorithmId.INSERTION_SORT):
            outcome = outcomes.get(algorithm)
            if outcome is None:
                continue
            if shape is not None:
                expected = closed_form(algorithm, shape, n)
                self._check(COUNT_LAWS, outcome.counters.comparisons == expected,
                            f"{algorithm.value} {shape.value} n={n}: {outcome.counters.comparisons} "
                            f"comparisons, expected {expected}")
            # 逆序是最坏情形
            worst = closed_form(algorithm, CountCase.REVERSE, n)
            self._check(COUNT_LAWS, outcome.counters.comparisons <= worst,
                        f"{algorithm.value} {list(values)}: {outcome.counters.comparisons} comparisons "
                        f"exceed the reverse-sorted count {worst}")

    @staticmethod
    def _shape(values: Sequence[int]) -> Optional[CountCase]:
        n = len(values)
        for case in (CountCase.SORTED, CountCase.REVERSE, CountCase.MIN_LAST):
            if tuple(values) == make_input(case, n):
                return case
        return None

    def _check_input(self, values: Tuple[int, ...]) -> None:
        n = len(values)
        outcomes: Dict[AlgorithmId, SortOutcome] = {}
        for algorithm in self.sorts:
            if algorithm is AlgorithmId.BOGO_SORT and n > settings.verify_bogo_max_n:
                continue
            outcome = self._run(algorithm, values)
            if outcome is None:
                continue
            outcomes[algorithm] = outcome
            self._check_contract(algorithm, values, outcome)

        adjacent = [outcomes[a] for a in ADJACENT_SWAP_SORTS if a in outcomes]
        if n >= 1 and len(adjacent) == len(ADJACENT_SWAP_SORTS):
            expo, cube, insertion = adjacent
            self._check(TRACE_EQUIVALENCE,
                        oracle.traces_equal(expo.trace, cube.trace)
                        and oracle.traces_equal(cube.trace, insertion.trace),
                        f"{list(values)}: traces differ")

        # 相同轨迹只核对一次
        checked: List[SwapTrace] = []
        for algorithm in ADJACENT_SWAP_SORTS:
            if algorithm not in outcomes:
                continue
            trace = outcomes[algorithm].trace
            if any(oracle.traces_equal(trace, seen) for seen in checked):
                self.results[MONOTONE_PROGRESS].cases += 1
                continue
            checked.append(trace)
            self._check_progress(algorithm, values, trace)

        self._check_counts(values, outcomes)

    # ------------------------------------------------------------------
    # 各扫描
    # ------------------------------------------------------------------

    def _exhaustive(self) -> None:
        total = sum(math.factorial(n) for n in range(self.max_n + 1))
        progress = tqdm(total=total, desc="verify permutations", unit="input",
                        disable=not settings.show_progress, leave=False)
        try:
            for n in range(self.max_n + 1):
                for values in oracle.permutations(n):
                    self._check_input(values)
                    progress.update(1)
        finally:
            progress.close()

    def _random(self) -> None:
        rng = np.random.default_rng(self.seed)
        for _ in range(self.random_inputs):
            n = int(rng.integers(1, settings.verify_random_max_n + 1))
            values = tuple(int(v) for v in rng.permutation(np.arange(1, n + 1)))
            for algorithm in self.sorts:
                if algorithm is AlgorithmId.BOGO_SORT:
                    continue
                sample = values
                if algorithm is AlgorithmId.EXPO_SORT and n > self.random_expo_max_n:
                    sample = values[:self.random_expo_max_n]
                outcome = self._run(algorithm, sample)
                if outcome is None:
                    continue
                self._check_contract(algorithm, sample, outcome)
                if algorithm in ADJACENT_SWAP_SORTS:
                    self._check_progress(algorithm, sample, outcome.trace)

    def _ties(self) -> None:
        limit = min(self.max_n, settings.verify_multiset_max_n)
        for n in range(limit + 1):
            for values in oracle.words(TIE_ALPHABET, n):
                traces = []
                for algorithm in self.sorts:
                    if algorithm is AlgorithmId.BOGO_SORT:
                        continue
                    outcome = self._run(algorithm, values)
                    if outcome is None:
                        continue
                    label = f"{algorithm.value} {list(values)}"
                    self._check(TIES, oracle.is_sorted(outcome.output)
                                and oracle.is_permutation_of(outcome.output, values),
                                f"{label}: not sorted")
                    self._check(TIES, all(e.larger > e.smaller for e in outcome.trace),
                                f"{label}: swapped equal elements")
                    if algorithm in ADJACENT_SWAP_SORTS:
                        traces.append(outcome.trace)
                if len(traces) == len(ADJACENT_SWAP_SORTS):
                    self._check(TIES, all(oracle.traces_equal(traces[0], t) for t in traces[1:]),
                                f"{list(values)}: traces differ")

    def _oracle_agreement(self) -> None:
        for algorithm, case in _ORACLE_CASES:
            if algorithm not in self.sorts:
                continue
            n_max = 2 * self.max_n
            if algorithm is AlgorithmId.EXPO_SORT:
                n_max = min(n_max, self.random_expo_max_n)
            table = {metric: dict(oracle.count_table(algorithm, case, n_max, metric))
                     for metric in oracle.METRICS}
            for n in range(1, n_max + 1):
                values = make_input(case, n, self.seed + n)
                outcome = self._run(algorithm, values)
                if outcome is None:
                    continue
                for metric in oracle.METRICS:
                    measured = getattr(outcome.counters, metric)
                    expected = table[metric][n]
                    self._check(ORACLE_AGREEMENT, measured == expected,
                                f"{algorithm.value} {case.value} n={n}: {metric} {measured} != table {expected}")

        # 两种独立推导互相核对
        for algorithm in (AlgorithmId.EXPO_SORT, AlgorithmId.CUBE_SORT, AlgorithmId.INSERTION_SORT):
            for case in (CountCase.SORTED, CountCase.MIN_LAST, CountCase.REVERSE):
                n_max = settings.expo_max_n if algorithm is AlgorithmId.EXPO_SORT else _CLOSED_FORM_MAX_N
                for n, count in oracle.count_table(algorithm, case, n_max):
                    expected = closed_form(algorithm, case, n)
                    self._check(ORACLE_AGREEMENT, count == expected,
                                f"{algorithm.value} {case.value} n={n}: table {count} != closed form {expected}")

    def _budget_safety(self) -> None:
        n = self.max_n
        values = make_input(CountCase.REVERSE, n)
        for algorithm in self.sorts:
            if algorithm is AlgorithmId.BOGO_SORT:
                budgets = range(1, 6)
            else:
                budgets = range(1, 21)
            for budget in budgets:
                run = SortRun(input=values, algorithm=algorithm, budget=budget, seed=self.seed)
                try:
                    counters = run_sort(run, self.sorts).counters
                except BudgetExceeded as e:
                    counters = e.counters
                except Exception as e:
                    self._check(BUDGET_SAFETY, False, f"{algorithm.value} budget={budget}: {e}")
                    continue
                used = counters.shuffles if algorithm is AlgorithmId.BOGO_SORT else counters.comparisons
                self._check(BUDGET_SAFETY, used <= budget,
                            f"{algorithm.value} budget={budget}: reported {used}")

    # ------------------------------------------------------------------

    def run(self) -> List[SuiteResult]:
        """运行全部套件

        Returns:
            List[SuiteResult]: 按 SUITES 顺序排列
        """
        self.results = {name: SuiteResult(suite=name) for name in SUITES}
        logger.info(f"verify: max_n={self.max_n}, random_inputs={self.random_inputs}, "
                    f"random_expo_max_n={self.random_expo_max_n}, seed={self.seed}")

        self._exhaustive()
        self._random()
        self._ties()
        self._oracle_agreement()
        self._budget_safety()

        for result in self.results.values():
            result.detail = self._detail(result)
            if not result.passed:
                logger.warning(f"{result.suite} 失败: {len(result.failures)} 项")
        return [self.results[name] for name in SUITES]

    def _detail(self, result: SuiteResult) -> str:
        if result.passed:
            return ""
        shown = result.failures[:MAX_REPORTED_FAILURES]
        extra = len(result.failures) - len(shown)
        detail = "; ".join(shown)
        return f"{detail} (+{extra} more)" if extra else detail


def verify(max_n: Optional[int] = None,
           sorts: Mapping[AlgorithmId, SortFunction] = SORTS,
           seed: Optional[int] = None,
           random_inputs: Optional[int] = None,
           random_expo_max_n: Optional[int] = None) -> List[SuiteResult]:
    """运行全部性质套件"""
    return PropertyVerifier(max_n, sorts, seed, random_inputs, random_expo_max_n).run()


def all_passed(results: Sequence[SuiteResult]) -> bool:
    return all(r.passed for r in results)


def format_table(results: Sequence[SuiteResult]) -> str:
    """渲染 suite / cases / status / detail 表"""
    rows = [
        SuiteResultSchema(
            suite=r.suite,
            cases=r.cases,
            status="PASS" if r.passed else "FAIL",
            detail=r.detail,
        ).model_dump()
        for r in results
    ]
    df = pd.DataFrame(rows, columns=["suite", "cases", "status", "detail"])
    return df.to_string(index=False)
