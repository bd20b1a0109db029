"""基准扫描服务

按 (n, trial) 逐格运行排序并生成 bench CSV；也负责读回 CSV 供拟合使用。
"""

import time
from concurrent.futures import ProcessPoolExecutor, as_completed
from dataclasses import asdict
from pathlib import Path
from typing import List, Optional, Tuple, Union

import numpy as np
import pandas as pd
from tqdm import tqdm

from reluctant.core.config import settings
from reluctant.core.exceptions import CsvSchemaError, GuardViolation
from reluctant.core.logging import logger
from reluctant.models.domain import AlgorithmId, BenchRow, CountCase, SortRun
from reluctant.sorts.dispatch import run_sort

BENCH_COLUMNS = [
    "algorithm", "n", "case", "trial",
    "comparisons", "swaps", "invocations", "shuffles", "elapsed_ns",
]

COUNT_COLUMNS = ("comparisons", "swaps", "invocations", "shuffles")


def trial_seed(seed: int, n: int, trial: int) -> int:
    """由主种子、规模与试验号派生的 64 位种子"""
    state = np.random.SeedSequence([seed, n, trial]).generate_state(1, dtype=np.uint64)
    return int(state[0])


def make_input(case: CountCase, n: int, seed: int = 0) -> Tuple[int, ...]:
    """按输入形态生成 {1..n} 上的数组

    Args:
        case: sorted / reverse / min-last / worst-known（同 reverse）/ random
        n: 规模
        seed: random 形态使用的种子

    Returns:
        Tuple[int, ...]: 输入数组
    """
    if case is CountCase.SORTED:
        return tuple(range(1, n + 1))
    if case in (CountCase.REVERSE, CountCase.WORST_KNOWN):
        return tuple(range(n, 0, -1))
    if case is CountCase.MIN_LAST:
        return tuple(range(2, n + 1)) + ((1,) if n >= 1 else ())
    rng = np.random.default_rng(seed)
    return tuple(int(v) for v in rng.permutation(np.arange(1, n + 1)))


def run_cell(
    algorithm: AlgorithmId,
    case: CountCase,
    n: int,
    trial: int,
    seed: int,
    allow_slow: bool = False,
    timing: bool = True,
) -> BenchRow:
    """运行一个 (n, trial) 格子"""
    cell_seed = trial_seed(seed, n, trial)
    run = SortRun(
        input=make_input(case, n, cell_seed),
        algorithm=algorithm,
        seed=cell_seed,
        allow_slow=allow_slow,
    )
    start = time.perf_counter_ns()
    outcome = run_sort(run)
    elapsed = time.perf_counter_ns() - start
    counters = outcome.counters
    return BenchRow(
        algorithm=algorithm.value,
        n=n,
        case=case.value,
        trial=trial,
        comparisons=counters.comparisons,
        swaps=counters.swaps,
        invocations=counters.invocations,
        shuffles=counters.shuffles,
        elapsed_ns=elapsed if timing else 0,
    )


def sweep(
    algorithm: AlgorithmId,
    case: CountCase,
    n_min: int,
    n_max: int,
    trials: int = 1,
    seed: int = 0,
    workers: int = 1,
    allow_slow: bool = False,
    timing: bool = True,
) -> List[BenchRow]:
    """扫描 n_min..n_max，每个 n 跑 trials 次

    行顺序总是按 (n, trial) 排列，与并行执行顺序无关。

    Raises:
        GuardViolation: 参数越界，或 ExpoSort 的 n_max 超过守卫且未加 --i-have-time
    """
    if n_min < 0 or n_max < n_min:
        raise GuardViolation(f"invalid n range [{n_min}, {n_max}]")
    if trials < 1:
        raise GuardViolation(f"trials must be >= 1, got {trials}")
    if algorithm is AlgorithmId.EXPO_SORT and n_max > settings.expo_max_n and not allow_slow:
        raise GuardViolation(
            f"exposort bench refuses n-max={n_max} > {settings.expo_max_n} without --i-have-time")

    cells = [(n, trial) for n in range(n_min, n_max + 1) for trial in range(trials)]
    logger.info(f"bench {algorithm.value}/{case.value}: n={n_min}..{n_max}, "
                f"{trials} trials, {len(cells)} cells, workers={workers}")

    rows: List[BenchRow] = []
    progress = tqdm(total=len(cells), desc=f"bench {algorithm.value}", unit="cell",
                    disable=not settings.show_progress, leave=False)
    try:
        if workers <= 1:
            for n, trial in cells:
                rows.append(run_cell(algorithm, case, n, trial, seed, allow_slow, timing))
                progress.update(1)
        else:
            with ProcessPoolExecutor(max_workers=workers) as executor:
                futures = [
                    executor.submit(run_cell, algorithm, case, n, trial, seed, allow_slow, timing)
                    for n, trial in cells
                ]
                for future in as_completed(futures):
                    rows.append(future.result())
                    progress.update(1)
    finally:
        progress.close()

    rows.sort(key=lambda r: (r.n, r.trial))
    return rows


def to_csv(rows: List[BenchRow]) -> str:
    """bench CSV 文本（含表头）"""
    df = pd.DataFrame([asdict(r) for r in rows], columns=BENCH_COLUMNS)
    return df.to_csv(index=False, lineterminator="\n")


def load_bench_csv(path: Union[str, Path]) -> pd.DataFrame:
    """读取 bench CSV 并校验表头

    Raises:
        CsvSchemaError: 文件不存在或不可读、表头不符、缺列或计数列不是整数
    """
    if not Path(path).is_file():
        raise CsvSchemaError(f"bench CSV not found: {path}")
    try:
        df = pd.read_csv(path)
    except (pd.errors.EmptyDataError, pd.errors.ParserError) as e:
        raise CsvSchemaError(f"cannot parse bench CSV {path}: {e}") from e
    except OSError as e:
        raise CsvSchemaError(f"cannot read bench CSV {path}: {e}") from e
    if list(df.columns) != BENCH_COLUMNS:
        raise CsvSchemaError(
            f"bench CSV header must be {','.join(BENCH_COLUMNS)}, got {','.join(map(str, df.columns))}")
    for column in ("n", "trial") + COUNT_COLUMNS:
        if not pd.api.types.is_integer_dtype(df[column]):
            raise CsvSchemaError(f"column {column!r} must hold integers")
    return df


def aggregate_series(df: pd.DataFrame, metric: str = "comparisons") -> List[Tuple[int, float]]:
    """按 n 取中位数，得到拟合用的 (n, count) 序列

    Raises:
        CsvSchemaError: metric 不是计数列，或 CSV 混有多个算法/形态
    """
    if metric not in COUNT_COLUMNS:
        raise CsvSchemaError(f"metric must be one of {COUNT_COLUMNS}, got {metric!r}")
    groups = df[["algorithm", "case"]].drop_duplicates()
    if len(groups) > 1:
        raise CsvSchemaError("bench CSV mixes several algorithm/case combinations")
    medians = df.groupby("n")[metric].median().sort_index()
    return [(int(n), float(v)) for n, v in medians.items()]


def load_series(path: Union[str, Path], metric: str = "comparisons",
                n_min: Optional[int] = None) -> List[Tuple[int, float]]:
    """读取 bench CSV 并聚合为序列（可丢弃 n < n_min 的点）"""
    series = aggregate_series(load_bench_csv(path), metric)
    if n_min is not None:
        series = [p for p in series if p[0] >= n_min]
    return series
