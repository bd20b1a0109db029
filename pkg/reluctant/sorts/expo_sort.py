"""ExpoSort

    ExpoSort(A, n):
        if n > 1:
            ExpoSort(A, n - 1)
            if A[n-1] > A[n]:
                swap A[n-1] and A[n]
            ExpoSort(A, n - 1)

递归用显式栈展开，n = 26 也不会触及解释器递归上限。
"""

from typing import List

from reluctant.instrumentation.recorder import Recorder, swap_adjacent
from reluctant.models.domain import AlgorithmId, SortOutcome, SortRun
from reluctant.sorts.base import finish, require

_ENTER = 0
_COMPARE = 1


def _expo(a: List[int], n: int, recorder: Recorder) -> None:
    stack = [(_ENTER, n)]
    while stack:
        stage, m = stack.pop()
        if stage == _ENTER:
            recorder.record_invocation()
            if m > 1:
                stack.append((_COMPARE, m))
                stack.append((_ENTER, m - 1))
        else:
            if recorder.greater(a[m - 2], a[m - 1]):
                swap_adjacent(a, m - 2, recorder)
            stack.append((_ENTER, m - 1))


def expo_sort(run: SortRun, recorder: Recorder) -> SortOutcome:
    """ExpoSort：比较次数恒为 2^(n-1) - 1

    Raises:
        BudgetExceeded: 比较次数超过 run 的预算
    """
    require(run, AlgorithmId.EXPO_SORT)
    a = list(run.input)
    _expo(a, len(a), recorder)
    return finish(a, recorder)
