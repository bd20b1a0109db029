"""增长模型拟合

把 (n, count) 序列拟合到八种增长律，按对数计数空间中的残差平方和选模型。

- 每个模型的残差：固定形状 c * g(n)，只拟合尺度 c（在 ln count - ln g(n) 上
  取均值），所以各模型的残差可直接比较；
- 报告的 slope / intercept 来自模型自身变换坐标下的两参数最小二乘：
  多项式族 (ln n, ln count)，指数模型 (n, log2 count)，其余 (ln g(n), ln count)。
"""

import math
from typing import Callable, Dict, Iterable, List, Sequence, Tuple

import numpy as np

from reluctant.core.exceptions import DegenerateSeries
from reluctant.models.domain import AlgorithmId, CountCase, FitReport, GrowthModel, ModelFit

MIN_POINTS = 4

# ties 的相对容差
_RSS_TOLERANCE = 1e-12

STOOGE_EXPONENT = math.log(3) / math.log(1.5)

_POLYNOMIAL_EXPONENTS: Dict[GrowthModel, float] = {
    GrowthModel.LINEAR: 1.0,
    GrowthModel.QUADRATIC: 2.0,
    GrowthModel.STOOGE: STOOGE_EXPONENT,
    GrowthModel.CUBIC: 3.0,
}


def log_predictor(model: GrowthModel, n: np.ndarray) -> np.ndarray:
    """ln g(n)，全部在对数空间计算，n! 与 2^n 不会溢出"""
    ln_n = np.log(n)
    if model in _POLYNOMIAL_EXPONENTS:
        return _POLYNOMIAL_EXPONENTS[model] * ln_n
    if model is GrowthModel.NLOGN:
        return ln_n + np.log(ln_n)
    if model is GrowthModel.QUASI_POLY:
        # n^(log2(n) / 2)
        return ln_n * ln_n / (2.0 * math.log(2))
    if model is GrowthModel.EXPONENTIAL:
        return n * math.log(2)
    if model is GrowthModel.LINEAR_FACTORIAL:
        return ln_n + np.array([math.lgamma(v + 1) for v in n])
    raise ValueError(f"unhandled growth model {model}")


def _least_squares(x: np.ndarray, y: np.ndarray) -> Tuple[float, float]:
    """y ≈ slope * x + intercept"""
    A = np.vstack([x, np.ones(len(x))]).T
    sol, _, _, _ = np.linalg.lstsq(A, y, rcond=None)
    slope, intercept = sol
    return float(slope), float(intercept)


def _validate(series: Sequence[Tuple[int, float]]) -> Tuple[np.ndarray, np.ndarray]:
    if len(series) < MIN_POINTS:
        raise DegenerateSeries(f"need at least {MIN_POINTS} points, got {len(series)}")
    n = np.array([float(p[0]) for p in series])
    counts = np.array([float(p[1]) for p in series])
    if np.any(counts < 1):
        raise DegenerateSeries("all counts must be >= 1")
    if np.any(n < 2):
        raise DegenerateSeries("growth predictors need n >= 2")
    if np.any(np.diff(n) <= 0):
        raise DegenerateSeries("n must be strictly increasing")
    return n, counts


def _fit_model(model: GrowthModel, n: np.ndarray, y: np.ndarray) -> ModelFit:
    ln_g = log_predictor(model, n)

    # 固定形状，只拟合尺度
    scale = float(np.mean(y - ln_g))
    residuals = y - ln_g - scale
    rss = float(np.sum(residuals ** 2))

    if model in _POLYNOMIAL_EXPONENTS:
        slope, intercept = _least_squares(np.log(n), y)
    elif model is GrowthModel.EXPONENTIAL:
        slope, intercept = _least_squares(n, y / math.log(2))
    else:
        slope, intercept = _least_squares(ln_g, y)
    return ModelFit(slope=slope, intercept=intercept, rss=rss)


def fit(series: Sequence[Tuple[int, float]]) -> FitReport:
    """拟合全部增长模型并选出残差最小者

    Args:
        series: [(n, count), ...]，至少 4 个点，n 严格递增且 >= 2，count >= 1

    Returns:
        FitReport: 各模型结果与选中模型（平局取增长较慢者）

    Raises:
        DegenerateSeries: 点数不足或计数非正
    """
    n, counts = _validate(series)
    y = np.log(counts)
    models = {model: _fit_model(model, n, y) for model in GrowthModel}

    selected = GrowthModel.LINEAR
    for model in GrowthModel:
        best = models[selected].rss
        if models[model].rss < best - _RSS_TOLERANCE * max(1.0, abs(best)):
            selected = model
    return FitReport(
        series=tuple((int(p[0]), float(p[1])) for p in series),
        models=models,
        selected=selected,
    )


def ratio_diagnostic(series: Sequence[Tuple[int, float]]) -> List[Tuple[int, float]]:
    """相邻比值 count(n) / count(n-1)

    Raises:
        DegenerateSeries: 少于两个点、n 不连续或计数非正
    """
    if len(series) < 2:
        raise DegenerateSeries("ratio diagnostic needs at least 2 points")
    ratios = []
    for (n_prev, c_prev), (n_cur, c_cur) in zip(series, series[1:]):
        if n_cur != n_prev + 1:
            raise DegenerateSeries(f"n values must be consecutive ({n_prev} -> {n_cur})")
        if c_prev <= 0 or c_cur <= 0:
            raise DegenerateSeries("counts must be positive")
        ratios.append((n_cur, c_cur / c_prev))
    return ratios


# ---------------------------------------------------------------------------
# 闭式计数
# ---------------------------------------------------------------------------

_CLOSED_FORMS: Dict[Tuple[AlgorithmId, CountCase], Callable[[int], int]] = {
    (AlgorithmId.EXPO_SORT, CountCase.SORTED): lambda n: 2 ** (n - 1) - 1 if n >= 1 else 0,
    (AlgorithmId.CUBE_SORT, CountCase.SORTED): lambda n: max(n - 1, 0),
    (AlgorithmId.CUBE_SORT, CountCase.MIN_LAST): lambda n: n * (n - 1) // 2,
    (AlgorithmId.CUBE_SORT, CountCase.REVERSE): lambda n: max(n - 1, 0) + math.comb(n, 3),
    (AlgorithmId.INSERTION_SORT, CountCase.SORTED): lambda n: max(n - 1, 0),
    (AlgorithmId.INSERTION_SORT, CountCase.MIN_LAST): lambda n: 2 * n - 3 if n >= 2 else 0,
    (AlgorithmId.INSERTION_SORT, CountCase.REVERSE): lambda n: n * (n - 1) // 2,
}

# 比较次数与输入无关
_ANY_CASE = (AlgorithmId.EXPO_SORT,)


def closed_form(algorithm: AlgorithmId, case: CountCase, n: int) -> int:
    """比较次数的闭式解

    Raises:
        ValueError: 该算法/形态没有闭式解
    """
    if algorithm in _ANY_CASE:
        case = CountCase.SORTED
    elif case is CountCase.WORST_KNOWN:
        case = CountCase.REVERSE
    try:
        return _CLOSED_FORMS[(algorithm, case)](n)
    except KeyError:
        raise ValueError(f"no closed form for {algorithm.value} / {case.value}") from None


def closed_form_series(algorithm: AlgorithmId, case: CountCase,
                       n_values: Iterable[int]) -> List[Tuple[int, int]]:
    """按闭式解生成 (n, comparisons) 序列"""
    return [(n, closed_form(algorithm, case, n)) for n in n_values]
