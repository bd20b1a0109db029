"""CubeSort

与 ExpoSort 的唯一区别：第二次递归调用移进了 if 分支。

    CubeSort(A, n):
        if n > 1:
            CubeSort(A, n - 1)
            if A[n-1] > A[n]:
                swap A[n-1] and A[n]
                CubeSort(A, n - 1)
"""

from typing import List

from reluctant.instrumentation.recorder import Recorder, swap_adjacent
from reluctant.models.domain import AlgorithmId, SortOutcome, SortRun
from reluctant.sorts.base import finish, require

_ENTER = 0
_COMPARE = 1


def _cube(a: List[int], n: int, recorder: Recorder) -> None:
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


def cube_sort(run: SortRun, recorder: Recorder) -> SortOutcome:
    """CubeSort：有序输入 n - 1 次比较，逆序输入 (n - 1) + C(n, 3) 次

    Raises:
        BudgetExceeded: 比较次数超过 run 的预算
    """
    require(run, AlgorithmId.CUBE_SORT)
    a = list(run.input)
    _cube(a, len(a), recorder)
    return finish(a, recorder)
