"""BogoSort

置乱前先检查是否有序；置乱为 Fisher-Yates，随机源为 numpy 的 PCG64，
同一种子得到同一结果。置乱不是相邻交换，轨迹保持为空。
"""

from typing import List

import numpy as np

from reluctant.instrumentation.recorder import Recorder
from reluctant.models.domain import AlgorithmId, SortOutcome, SortRun
from reluctant.sorts.base import finish, require


def _in_order(a: List[int], recorder: Recorder) -> bool:
    for k in range(len(a) - 1):
        if recorder.greater(a[k], a[k + 1]):
            return False
    return True


def fisher_yates(a: List[int], rng: np.random.Generator) -> None:
    """原地均匀置乱"""
    for i in range(len(a) - 1, 0, -1):
        j = int(rng.integers(0, i + 1))
        a[i], a[j] = a[j], a[i]


def bogo_sort(run: SortRun, recorder: Recorder) -> SortOutcome:
    """BogoSort

    Raises:
        BudgetExceeded: 置乱次数超过上限（此算法的预算按置乱次数计）
    """
    require(run, AlgorithmId.BOGO_SORT)
    a = list(run.input)
    rng = np.random.Generator(np.random.PCG64(run.seed))
    recorder.record_invocation()
    while not _in_order(a, recorder):
        recorder.record_shuffle()
        fisher_yates(a, rng)
    return finish(a, recorder)
