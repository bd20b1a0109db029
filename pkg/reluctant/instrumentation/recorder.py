"""计数器与交换轨迹记录

计数口径：一次"比较"即一次元素对元素的判断；循环变量与下标运算不计。
"""

from typing import List, Optional, Sequence, Tuple

from reluctant.core.exceptions import BudgetExceeded, InconsistentTrace
from reluctant.models.domain import Budget, CounterSet, SwapEvent, SwapTrace


class Recorder:
    """单次运行的计数与轨迹接收器

    一个 Recorder 只属于一次运行，不在运行之间共享。
    """

    __slots__ = ("budget", "comparisons", "swaps", "invocations", "shuffles", "_events")

    def __init__(self, budget: Optional[Budget] = None):
        self.budget = budget or Budget()
        self.comparisons = 0
        self.swaps = 0
        self.invocations = 0
        self.shuffles = 0
        self._events: List[SwapEvent] = []

    def record_comparison(self) -> None:
        """记录一次元素比较

        Raises:
            BudgetExceeded: 比较次数将超过预算，异常携带停止时的计数
        """
        limit = self.budget.max_comparisons
        if limit is not None and self.comparisons >= limit:
            raise BudgetExceeded(self.snapshot(), limit, "comparisons")
        self.comparisons += 1

    def greater(self, left: int, right: int) -> bool:
        """记录一次比较并返回 left > right"""
        self.record_comparison()
        return left > right

    def record_swap(self, left: int, larger: int, smaller: int, right: Optional[int] = None) -> None:
        """记录一次交换

        Args:
            left: 左元素的 1 起始位置
            larger: 交换前左侧的值
            smaller: 交换前右侧的值
            right: 右元素的 1 起始位置，缺省为 left + 1（相邻交换）
        """
        if not larger > smaller:
            raise ValueError(f"swap at {left} of an ordered pair ({larger}, {smaller})")
        self.swaps += 1
        self._events.append(SwapEvent(
            step=self.swaps, left=left, larger=larger, smaller=smaller,
            right=right if right is not None else left + 1,
        ))

    def record_invocation(self) -> None:
        self.invocations += 1

    def record_shuffle(self) -> None:
        """记录一次完整的随机置乱

        Raises:
            BudgetExceeded: 置乱次数将超过上限
        """
        limit = self.budget.max_shuffles
        if limit is not None and self.shuffles >= limit:
            raise BudgetExceeded(self.snapshot(), limit, "shuffles")
        self.shuffles += 1

    def snapshot(self) -> CounterSet:
        return CounterSet(
            comparisons=self.comparisons,
            swaps=self.swaps,
            invocations=self.invocations,
            shuffles=self.shuffles,
        )

    @property
    def trace(self) -> SwapTrace:
        return SwapTrace(tuple(self._events))


def swap_positions(a: List[int], i: int, j: int, recorder: Recorder) -> None:
    """交换 a[i] 与 a[j]（0 起始，i < j）并记录；轨迹对外使用 1 起始位置"""
    recorder.record_swap(i + 1, a[i], a[j], right=j + 1)
    a[i], a[j] = a[j], a[i]


def swap_adjacent(a: List[int], i: int, recorder: Recorder) -> None:
    """交换 a[i] 与 a[i+1]"""
    swap_positions(a, i, i + 1, recorder)


def replay(trace: SwapTrace, input: Sequence[int]) -> Tuple[int, ...]:
    """在输入上依次重放交换

    Args:
        trace: 交换轨迹
        input: 原始输入

    Returns:
        Tuple[int, ...]: 重放后的数组

    Raises:
        InconsistentTrace: 位置越界、记录值与数组不符或交换的是有序对
    """
    a = list(input)
    for event in trace:
        i, j = event.left - 1, event.right - 1
        if not 0 <= i < j < len(a):
            raise InconsistentTrace(
                f"step {event.step}: positions ({event.left}, {event.right}) invalid for n={len(a)}",
                event.step)
        if (a[i], a[j]) != (event.larger, event.smaller):
            raise InconsistentTrace(
                f"step {event.step}: recorded ({event.larger}, {event.smaller}) "
                f"but array holds ({a[i]}, {a[j]})", event.step)
        if not a[i] > a[j]:
            raise InconsistentTrace(f"step {event.step}: pair already in order", event.step)
        a[i], a[j] = a[j], a[i]
    return tuple(a)
