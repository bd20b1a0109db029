"""排序实现的公共部分"""

from typing import Callable, List

from reluctant.instrumentation.recorder import Recorder
from reluctant.models.domain import AlgorithmId, SortOutcome, SortRun

SortFunction = Callable[[SortRun, Recorder], SortOutcome]


def require(run: SortRun, algorithm: AlgorithmId) -> None:
    """确认请求交给了对应的排序"""
    if run.algorithm is not algorithm:
        raise ValueError(f"{algorithm.value} received a {run.algorithm.value} run")


def finish(a: List[int], recorder: Recorder) -> SortOutcome:
    return SortOutcome(output=tuple(a), counters=recorder.snapshot(), trace=recorder.trace)
