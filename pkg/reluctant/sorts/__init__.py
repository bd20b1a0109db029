"""六种排序算法（统一的计数接口）"""

from reluctant.sorts.dispatch import ADJACENT_SWAP_SORTS, SORTS, budget_for, check_guard, run_sort

__all__ = ["ADJACENT_SWAP_SORTS", "SORTS", "budget_for", "check_guard", "run_sort"]
