"""领域模型定义"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Iterator, Optional, Tuple

from reluctant.core.exceptions import UnknownAlgorithmName

INT64_MIN = -(2 ** 63)
INT64_MAX = 2 ** 63 - 1
UINT64_MAX = 2 ** 64 - 1


class AlgorithmId(str, Enum):
    """六种排序算法（值即命令行名称）"""
    EXPO_SORT = "exposort"
    CUBE_SORT = "cubesort"
    INSERTION_SORT = "insertionsort"
    STOOGE_SORT = "stoogesort"
    SLOW_SORT = "slowsort"
    BOGO_SORT = "bogosort"

    @classmethod
    def from_name(cls, name: str) -> "AlgorithmId":
        """按名称解析算法，大小写与连字符不敏感

        Raises:
            UnknownAlgorithmName: 名称不对应任何算法
        """
        key = name.strip().lower().replace("-", "").replace("_", "")
        for alg in cls:
            if alg.value == key:
                return alg
        raise UnknownAlgorithmName(f"unknown algorithm: {name!r}")


class CountCase(str, Enum):
    """输入形态"""
    SORTED = "sorted"
    REVERSE = "reverse"
    MIN_LAST = "min-last"
    WORST_KNOWN = "worst-known"
    RANDOM = "random"


def check_element(value: int) -> int:
    """校验 64 位有符号整数"""
    if isinstance(value, bool) or not isinstance(value, int):
        raise ValueError(f"element must be an int, got {value!r}")
    if not INT64_MIN <= value <= INT64_MAX:
        raise ValueError(f"element {value} outside the 64-bit signed range")
    return value


@dataclass(frozen=True)
class SortRun:
    """一次排序请求"""
    input: Tuple[int, ...]
    algorithm: AlgorithmId
    budget: Optional[int] = None
    seed: int = 0
    # 显式放行超出默认守卫的规模（--i-have-time）
    allow_slow: bool = False

    def __post_init__(self):
        object.__setattr__(self, "input", tuple(check_element(v) for v in self.input))
        if self.budget is not None and self.budget < 1:
            raise ValueError(f"budget must be >= 1, got {self.budget}")
        if not 0 <= self.seed <= UINT64_MAX:
            raise ValueError(f"seed {self.seed} outside the 64-bit unsigned range")

    @property
    def n(self) -> int:
        return len(self.input)


@dataclass(frozen=True)
class Budget:
    """计数上限"""
    max_comparisons: Optional[int] = None
    max_shuffles: Optional[int] = None

    def __post_init__(self):
        for name in ("max_comparisons", "max_shuffles"):
            limit = getattr(self, name)
            if limit is not None and limit < 1:
                raise ValueError(f"{name} must be >= 1, got {limit}")


@dataclass(frozen=True)
class CounterSet:
    """一次运行的精确计数"""
    comparisons: int = 0
    swaps: int = 0
    invocations: int = 0
    shuffles: int = 0

    def to_dict(self) -> Dict[str, int]:
        return {
            "comparisons": self.comparisons,
            "swaps": self.swaps,
            "invocations": self.invocations,
            "shuffles": self.shuffles,
        }


@dataclass(frozen=True)
class SwapEvent:
    """一次交换；left/right 为 1 起始位置，相邻交换时 right = left + 1"""
    step: int
    left: int
    larger: int
    smaller: int
    right: int = 0

    def __post_init__(self):
        if self.right == 0:
            object.__setattr__(self, "right", self.left + 1)

    @property
    def adjacent(self) -> bool:
        return self.right == self.left + 1

    @property
    def values(self) -> Tuple[int, int]:
        return (self.larger, self.smaller)


@dataclass(frozen=True)
class SwapTrace:
    """按执行顺序排列的交换事件"""
    events: Tuple[SwapEvent, ...] = ()

    def __len__(self) -> int:
        return len(self.events)

    def __iter__(self) -> Iterator[SwapEvent]:
        return iter(self.events)

    @property
    def lefts(self) -> Tuple[int, ...]:
        return tuple(e.left for e in self.events)


@dataclass(frozen=True)
class SortOutcome:
    """排序结果"""
    output: Tuple[int, ...]
    counters: CounterSet
    trace: SwapTrace


class GrowthModel(str, Enum):
    """增长模型，按增长速度从低到高排列（平局时取靠前者）"""
    LINEAR = "linear"
    NLOGN = "nlogn"
    QUADRATIC = "quadratic"
    STOOGE = "stooge"
    CUBIC = "cubic"
    QUASI_POLY = "quasipoly"
    EXPONENTIAL = "exponential"
    LINEAR_FACTORIAL = "linearfactorial"


@dataclass(frozen=True)
class ModelFit:
    """单个模型的拟合结果"""
    slope: float
    intercept: float
    rss: float


@dataclass(frozen=True)
class FitReport:
    """拟合报告"""
    series: Tuple[Tuple[int, float], ...]
    models: Dict[GrowthModel, ModelFit]
    selected: GrowthModel

    @property
    def exponent(self) -> float:
        """log-log 斜率（多项式族共用）"""
        return self.models[GrowthModel.LINEAR].slope

    @property
    def base(self) -> float:
        """指数模型的底数估计"""
        return 2.0 ** self.models[GrowthModel.EXPONENTIAL].slope


@dataclass(frozen=True)
class BenchRow:
    """bench CSV 的一行（字段顺序即列顺序）"""
    algorithm: str
    n: int
    case: str
    trial: int
    comparisons: int
    swaps: int
    invocations: int
    shuffles: int
    elapsed_ns: int


@dataclass
class SuiteResult:
    """一个性质验证套件的结果"""
    suite: str
    cases: int = 0
    passed: bool = True
    detail: str = ""
    failures: list = field(default_factory=list)
