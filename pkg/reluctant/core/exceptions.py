"""异常定义"""

from typing import Optional, TYPE_CHECKING

if TYPE_CHECKING:
    from reluctant.models.domain import CounterSet


class ReluctantError(Exception):
    """所有业务异常的基类"""


class BudgetExceeded(ReluctantError):
    """计数预算耗尽

    Attributes:
        counters: 停止时的计数快照
        limit: 触发的上限
        kind: "comparisons" 或 "shuffles"
    """

    def __init__(self, counters: "CounterSet", limit: int, kind: str = "comparisons"):
        self.counters = counters
        self.limit = limit
        self.kind = kind
        super().__init__(f"{kind} budget {limit} exceeded")


class GuardViolation(ReluctantError):
    """运行请求超出默认守卫（例如 ExpoSort n > 26 且无预算/覆盖）"""


class InconsistentTrace(ReluctantError):
    """交换轨迹与数组状态不一致"""

    def __init__(self, message: str, step: Optional[int] = None):
        self.step = step
        super().__init__(message)


class TooLarge(ReluctantError):
    """枚举或递推表规模超出守卫"""


class DegenerateSeries(ReluctantError):
    """拟合序列不足或含非正计数"""


class ParseError(ReluctantError):
    """输入中出现非 64 位有符号整数的记号"""


class UnknownAlgorithmName(ReluctantError):
    """--alg 给出的名称不对应任何排序"""


class CsvSchemaError(ReluctantError):
    """bench CSV 表头不符合约定"""


class UsageError(ReluctantError):
    """命令行参数错误"""
