"""命令行输出模型（JSON 约定）"""

from typing import Dict, List, Optional, Union

from pydantic import BaseModel, Field, model_serializer

from reluctant.models.domain import FitReport, SortOutcome, SortRun, CounterSet

# JSON 中浮点数保留的小数位
FLOAT_DIGITS = 9


def clean_float(value: float) -> float:
    # 加 0.0 去掉 -0.0
    return round(float(value), FLOAT_DIGITS) + 0.0


def clean_count(value: float) -> Union[int, float]:
    return int(value) if float(value).is_integer() else clean_float(value)


class SwapEventSchema(BaseModel):
    """交换事件"""
    step: int = Field(..., description="1 起始的序号")
    left: int = Field(..., description="左元素的 1 起始位置")
    larger: int = Field(..., description="交换前左侧（较大）的值")
    smaller: int = Field(..., description="交换前右侧（较小）的值")
    right: Optional[int] = Field(None, description="非相邻交换时右元素的 1 起始位置")

    class Config:
        from_attributes = True

    @model_serializer(mode="wrap")
    def serialize_event(self, handler):
        # 相邻交换只输出约定的四个键
        data = handler(self)
        if data.get("right") in (None, self.left + 1):
            data.pop("right", None)
        return data


class CountersSchema(BaseModel):
    """计数"""
    comparisons: int = Field(0, description="元素比较次数")
    swaps: int = Field(0, description="交换次数")
    invocations: int = Field(0, description="过程调用次数（含递归）")
    shuffles: int = Field(0, description="随机置乱次数")

    class Config:
        from_attributes = True


class TraceSchema(BaseModel):
    """交换轨迹 JSON"""
    algorithm: str
    n: int
    seed: Optional[int] = None
    input: List[int]
    events: List[SwapEventSchema] = Field(default_factory=list)
    counters: CountersSchema

    @classmethod
    def from_outcome(cls, run: SortRun, outcome: SortOutcome, seed: Optional[int]) -> "TraceSchema":
        return cls(
            algorithm=run.algorithm.value,
            n=run.n,
            seed=seed,
            input=list(run.input),
            events=[SwapEventSchema.model_validate(e) for e in outcome.trace],
            counters=CountersSchema.model_validate(outcome.counters),
        )


class RunSchema(TraceSchema):
    """run 命令输出：轨迹 JSON 加排序结果"""
    output: List[int]

    @classmethod
    def from_outcome(cls, run: SortRun, outcome: SortOutcome, seed: Optional[int]) -> "RunSchema":
        trace = TraceSchema.from_outcome(run, outcome, seed)
        return cls(**trace.model_dump(), output=list(outcome.output))


class BudgetErrorSchema(BaseModel):
    """预算耗尽时的输出（不含中间数组）"""
    algorithm: str
    n: int
    seed: Optional[int] = None
    input: List[int]
    error: str = "budget_exceeded"
    limit: int
    counters: CountersSchema

    @classmethod
    def from_counters(cls, run: SortRun, counters: CounterSet, limit: int,
                      seed: Optional[int]) -> "BudgetErrorSchema":
        return cls(
            algorithm=run.algorithm.value,
            n=run.n,
            seed=seed,
            input=list(run.input),
            limit=limit,
            counters=CountersSchema.model_validate(counters),
        )


class ModelFitSchema(BaseModel):
    """单个模型的拟合结果"""
    slope: float
    intercept: float
    rss: float


class FitReportSchema(BaseModel):
    """FitReport JSON"""
    series: List[List[Union[int, float]]]
    models: Dict[str, ModelFitSchema]
    selected: str

    @classmethod
    def from_report(cls, report: FitReport) -> "FitReportSchema":
        return cls(
            series=[[n, clean_count(count)] for n, count in report.series],
            models={
                model.value: ModelFitSchema(
                    slope=clean_float(fit.slope),
                    intercept=clean_float(fit.intercept),
                    rss=clean_float(fit.rss),
                )
                for model, fit in report.models.items()
            },
            selected=report.selected.value,
        )


class SuiteResultSchema(BaseModel):
    """验证套件结果（表格一行）"""
    suite: str
    cases: int
    status: str
    detail: str = ""
