"""StoogeSort

    StoogeSort(A, i, j):
        if A[i] > A[j]:
            swap A[i] and A[j]
        if j - i + 1 > 2:
            k = floor((j - i + 1) / 3)
            StoogeSort(A, i, j - k)      # 前 2/3
            StoogeSort(A, i + k, j)      # 后 2/3
            StoogeSort(A, i, j - k)      # 再排前 2/3

每次调用恰好一次比较，比较次数与输入无关。
"""

from reluctant.instrumentation.recorder import Recorder, swap_positions
from reluctant.models.domain import AlgorithmId, SortOutcome, SortRun
from reluctant.sorts.base import finish, require


def stooge_sort(run: SortRun, recorder: Recorder) -> SortOutcome:
    """StoogeSort

    Raises:
        BudgetExceeded: 比较次数超过 run 的预算
    """
    require(run, AlgorithmId.STOOGE_SORT)
    a = list(run.input)
    # 调用之间没有后续工作，栈里只需放待执行的区间
    stack = [(0, len(a) - 1)]
    while stack:
        i, j = stack.pop()
        recorder.record_invocation()
        if j <= i:
            continue
        if recorder.greater(a[i], a[j]):
            swap_positions(a, i, j, recorder)
        if j - i + 1 > 2:
            k = (j - i + 1) // 3
            stack.append((i, j - k))
            stack.append((i + k, j))
            stack.append((i, j - k))
    return finish(a, recorder)
