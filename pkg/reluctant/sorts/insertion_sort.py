"""InsertionSort（外层 for，内层带复合条件的 while）"""

from reluctant.instrumentation.recorder import Recorder, swap_adjacent
from reluctant.models.domain import AlgorithmId, SortOutcome, SortRun
from reluctant.sorts.base import finish, require


def insertion_sort(run: SortRun, recorder: Recorder) -> SortOutcome:
    """InsertionSort

    while 条件短路：i 到达最左端时不再比较元素。

    Raises:
        BudgetExceeded: 比较次数超过 run 的预算
    """
    require(run, AlgorithmId.INSERTION_SORT)
    a = list(run.input)
    recorder.record_invocation()
    for j in range(1, len(a)):
        i = j
        while i > 0 and recorder.greater(a[i - 1], a[i]):
            swap_adjacent(a, i - 1, recorder)
            i -= 1
    return finish(a, recorder)
