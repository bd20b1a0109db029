"""单一入口：按 AlgorithmId 分派，并施加默认守卫与预算"""

from typing import Mapping, Optional

from reluctant.core.config import settings
from reluctant.core.exceptions import BudgetExceeded, GuardViolation
from reluctant.core.logging import logger
from reluctant.instrumentation.recorder import Recorder
from reluctant.models.domain import AlgorithmId, Budget, SortOutcome, SortRun
from reluctant.sorts.base import SortFunction
from reluctant.sorts.bogo_sort import bogo_sort
from reluctant.sorts.cube_sort import cube_sort
from reluctant.sorts.expo_sort import expo_sort
from reluctant.sorts.insertion_sort import insertion_sort
from reluctant.sorts.slow_sort import slow_sort
from reluctant.sorts.stooge_sort import stooge_sort

SORTS: Mapping[AlgorithmId, SortFunction] = {
    AlgorithmId.EXPO_SORT: expo_sort,
    AlgorithmId.CUBE_SORT: cube_sort,
    AlgorithmId.INSERTION_SORT: insertion_sort,
    AlgorithmId.STOOGE_SORT: stooge_sort,
    AlgorithmId.SLOW_SORT: slow_sort,
    AlgorithmId.BOGO_SORT: bogo_sort,
}

# 交换均为相邻交换、轨迹可与 InsertionSort 逐项比较的三种算法
ADJACENT_SWAP_SORTS = (
    AlgorithmId.EXPO_SORT,
    AlgorithmId.CUBE_SORT,
    AlgorithmId.INSERTION_SORT,
)


def budget_for(run: SortRun) -> Budget:
    """把 run.budget 解释为对应算法的上限

    BogoSort 的预算是置乱次数，缺省为 settings.bogo_max_shuffles；
    其余算法的预算是比较次数，缺省不设上限。
    """
    if run.algorithm is AlgorithmId.BOGO_SORT:
        return Budget(max_shuffles=run.budget or settings.bogo_max_shuffles)
    return Budget(max_comparisons=run.budget)


def check_guard(run: SortRun) -> None:
    """ExpoSort 在 n 超过 expo_max_n 且无预算、无覆盖时拒绝运行

    Raises:
        GuardViolation: 超出默认守卫
    """
    if (run.algorithm is AlgorithmId.EXPO_SORT
            and run.n > settings.expo_max_n
            and run.budget is None
            and not run.allow_slow):
        raise GuardViolation(
            f"exposort refuses n={run.n} > {settings.expo_max_n} "
            f"without --budget or --i-have-time (2^(n-1)-1 comparisons)")


def run_sort(
    run: SortRun,
    sorts: Mapping[AlgorithmId, SortFunction] = SORTS,
    recorder: Optional[Recorder] = None,
) -> SortOutcome:
    """执行一次排序

    Args:
        run: 排序请求
        sorts: 算法表（验证时可替换为变体）
        recorder: 计数接收器，缺省按 run 的预算新建

    Returns:
        SortOutcome: 输出、计数与轨迹

    Raises:
        GuardViolation: 超出默认守卫
        BudgetExceeded: 预算耗尽
    """
    check_guard(run)
    if recorder is None:
        recorder = Recorder(budget_for(run))
    try:
        return sorts[run.algorithm](run, recorder)
    except BudgetExceeded as e:
        logger.debug(f"{run.algorithm.value} n={run.n} 预算耗尽: {e.kind} 上限 {e.limit}")
        raise
