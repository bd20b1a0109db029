"""SlowSort（multiply-and-surrender）

    SlowSort(A, i, j):
        if i >= j: return
        m = floor((i + j) / 2)
        SlowSort(A, i, m)
        SlowSort(A, m + 1, j)
        if A[m] > A[j]:
            swap A[m] and A[j]
        SlowSort(A, i, j - 1)
"""

from reluctant.instrumentation.recorder import Recorder, swap_positions
from reluctant.models.domain import AlgorithmId, SortOutcome, SortRun
from reluctant.sorts.base import finish, require

_ENTER = 0
_COMPARE = 1


def slow_sort(run: SortRun, recorder: Recorder) -> SortOutcome:
    """SlowSort：比较次数满足 c(i,j) = c(i,m) + c(m+1,j) + 1 + c(i,j-1)

    Raises:
        BudgetExceeded: 比较次数超过 run 的预算
    """
    require(run, AlgorithmId.SLOW_SORT)
    a = list(run.input)
    stack = [(_ENTER, 0, len(a) - 1)]
    while stack:
        stage, i, j = stack.pop()
        if stage == _ENTER:
            recorder.record_invocation()
            if i >= j:
                continue
            m = (i + j) // 2
            stack.append((_COMPARE, i, j))
            stack.append((_ENTER, m + 1, j))
            stack.append((_ENTER, i, m))
        else:
            m = (i + j) // 2
            if recorder.greater(a[m], a[j]):
                swap_positions(a, m, j, recorder)
            stack.append((_ENTER, i, j - 1))
    return finish(a, recorder)
