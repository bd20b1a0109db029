"""暴力真值（oracle）

逆序对计数、排列枚举、有序/多重集检查、轨迹等价，以及用递推式直接
求出的精确计数表。这里的实现都刻意保持简单直白，不依赖被验证的排序。
"""

import itertools
from collections import Counter
from typing import Callable, Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from reluctant.core.config import settings
from reluctant.core.exceptions import TooLarge
from reluctant.models.domain import AlgorithmId, CountCase, SwapTrace

# 非 ExpoSort 递推表的规模上限
COUNT_TABLE_MAX_N = 100_000

METRICS = ("comparisons", "invocations")


def inversion_count(a: Sequence[int]) -> int:
    """逆序对数 |{(i, j) : i < j, a[i] > a[j]}|，O(n^2) 逐对扫描"""
    n = len(a)
    return sum(1 for i in range(n) for j in range(i + 1, n) if a[i] > a[j])


def is_sorted(a: Sequence[int]) -> bool:
    """非递减检查"""
    return all(a[k] <= a[k + 1] for k in range(len(a) - 1))


def is_permutation_of(a: Sequence[int], b: Sequence[int]) -> bool:
    """多重集相等检查"""
    return Counter(a) == Counter(b)


def permutations(n: int, max_n: Optional[int] = None) -> Iterator[Tuple[int, ...]]:
    """{1..n} 的全部 n! 个排列

    Raises:
        TooLarge: n 超过上限（缺省 settings.permutation_max_n）
    """
    limit = settings.permutation_max_n if max_n is None else max_n
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if n > limit:
        raise TooLarge(f"refusing to enumerate {n}! permutations (limit n <= {limit})")
    return itertools.permutations(range(1, n + 1))


def words(alphabet: Iterable[int], n: int, max_n: Optional[int] = None) -> Iterator[Tuple[int, ...]]:
    """字母表上长度为 n 的全部序列（含重复值的输入）

    Raises:
        TooLarge: n 超过上限
    """
    limit = settings.permutation_max_n if max_n is None else max_n
    if n > limit:
        raise TooLarge(f"refusing to enumerate words of length {n} (limit {limit})")
    return itertools.product(tuple(alphabet), repeat=n)


def _event_key(trace: SwapTrace) -> List[Tuple[int, int, int, int]]:
    return [(e.left, e.right, e.larger, e.smaller) for e in trace]


def traces_equal(t1: SwapTrace, t2: SwapTrace) -> bool:
    """长度相同且逐项 (位置, 较大值, 较小值) 相同；忽略序号"""
    return len(t1) == len(t2) and _event_key(t1) == _event_key(t2)


# ---------------------------------------------------------------------------
# 递推式计数表
# ---------------------------------------------------------------------------

def _expo_table(n_max: int, metric: str) -> List[int]:
    # comp(n) = 2 comp(n-1) + 1, comp(1) = 0; inv(n) = 2 inv(n-1) + 1, inv(1) = 1
    base = 0 if metric == "comparisons" else 1
    values = [base, base]
    for _ in range(2, n_max + 1):
        values.append(2 * values[-1] + 1)
    return values


def _cube_tables(n_max: int, metric: str) -> Dict[CountCase, List[int]]:
    # f1: 有序；f2: 前 n-1 个有序且最小值在末尾；f3: 逆序
    #   f1(n) = f1(n-1) + w
    #   f2(n) = f1(n-1) + w + f2(n-1)
    #   f3(n) = f3(n-1) + w + f2(n-1)
    # w 为本层的一次比较（或一次调用）
    base = 0 if metric == "comparisons" else 1
    f1, f2, f3 = [base, base], [base, base], [base, base]
    for n in range(2, n_max + 1):
        f1.append(f1[n - 1] + 1)
        f2.append(f1[n - 1] + 1 + f2[n - 1])
        f3.append(f3[n - 1] + 1 + f2[n - 1])
    return {CountCase.SORTED: f1, CountCase.MIN_LAST: f2, CountCase.REVERSE: f3}


def _insertion_tables(n_max: int, metric: str) -> Dict[CountCase, List[int]]:
    if metric == "invocations":
        ones = [1] * (n_max + 1)
        return {CountCase.SORTED: ones, CountCase.MIN_LAST: ones, CountCase.REVERSE: ones}
    # 第 j 个元素：有序时 1 次比较；逆序时 j-1 次比较后到达最左端（不再比较）
    g_sorted, g_reverse, g_min_last = [0, 0], [0, 0], [0, 0]
    for n in range(2, n_max + 1):
        g_sorted.append(g_sorted[n - 1] + 1)
        g_reverse.append(g_reverse[n - 1] + (n - 1))
        g_min_last.append(g_sorted[n - 1] + (n - 1))
    return {CountCase.SORTED: g_sorted, CountCase.MIN_LAST: g_min_last, CountCase.REVERSE: g_reverse}


def _stooge_table(n_max: int, metric: str) -> List[int]:
    # s(m) = w + 3 s(m - floor(m/3))，m >= 3；s(2) = w
    if metric == "comparisons":
        values = [0, 0, 1]
    else:
        values = [1, 1, 1]
    for m in range(3, n_max + 1):
        values.append(1 + 3 * values[m - m // 3])
    return values


def _slow_table(n_max: int, metric: str) -> List[int]:
    # c(m) = c(ceil(m/2)) + c(floor(m/2)) + w + c(m-1)
    base = 0 if metric == "comparisons" else 1
    values = [base, base]
    for m in range(2, n_max + 1):
        values.append(values[(m + 1) // 2] + values[m // 2] + 1 + values[m - 1])
    return values


_INPUT_INDEPENDENT: Dict[AlgorithmId, Callable[[int, str], List[int]]] = {
    AlgorithmId.EXPO_SORT: _expo_table,
    AlgorithmId.STOOGE_SORT: _stooge_table,
    AlgorithmId.SLOW_SORT: _slow_table,
}

_CASE_DEPENDENT: Dict[AlgorithmId, Callable[[int, str], Dict[CountCase, List[int]]]] = {
    AlgorithmId.CUBE_SORT: _cube_tables,
    AlgorithmId.INSERTION_SORT: _insertion_tables,
}


def worst_known_case(algorithm: AlgorithmId) -> CountCase:
    """各算法约定的"已知最坏"输入形态（ExpoSort 与输入无关，沿用逆序）"""
    return CountCase.REVERSE


def count_table(
    algorithm: AlgorithmId,
    case: CountCase,
    n_max: int,
    metric: str = "comparisons",
) -> List[Tuple[int, int]]:
    """用递推式直接求 n = 1..n_max 的精确计数（不运行排序）

    Args:
        algorithm: 算法
        case: 输入形态；ExpoSort/StoogeSort/SlowSort 的比较次数与输入无关，接受任意形态
        n_max: 最大规模
        metric: "comparisons" 或 "invocations"

    Returns:
        List[Tuple[int, int]]: [(n, count), ...]

    Raises:
        TooLarge: n_max 超出该算法的守卫
    """
    if metric not in METRICS:
        raise ValueError(f"metric must be one of {METRICS}, got {metric!r}")
    limit = settings.expo_max_n if algorithm is AlgorithmId.EXPO_SORT else COUNT_TABLE_MAX_N
    if n_max > limit:
        raise TooLarge(f"{algorithm.value} count table limited to n <= {limit}, got {n_max}")
    if n_max < 1:
        return []

    if algorithm in _INPUT_INDEPENDENT:
        values = _INPUT_INDEPENDENT[algorithm](n_max, metric)
    elif algorithm in _CASE_DEPENDENT:
        if case is CountCase.WORST_KNOWN:
            case = worst_known_case(algorithm)
        tables = _CASE_DEPENDENT[algorithm](n_max, metric)
        if case not in tables:
            raise ValueError(f"{algorithm.value} has no exact count for case {case.value!r}")
        values = tables[case]
    else:
        raise ValueError(f"{algorithm.value} counts are random; no exact table")
    return [(n, values[n]) for n in range(1, n_max + 1)]
