"""命令共用的输入输出工具"""

import argparse
import json
import sys
from pathlib import Path
from typing import Any, Optional, TextIO, Tuple, Type, Union

from reluctant.core.config import settings
from reluctant.core.exceptions import BudgetExceeded, ParseError, UsageError
from reluctant.models.domain import INT64_MAX, INT64_MIN, UINT64_MAX, AlgorithmId, SortRun
from reluctant.models.schemas import BudgetErrorSchema, RunSchema, TraceSchema
from reluctant.sorts import run_sort

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_BUDGET = 2


def parse_elements(text: str) -> Tuple[int, ...]:
    """把空白分隔的文本解析为 64 位有符号整数

    Raises:
        ParseError: 出现非整数记号或越界值
    """
    values = []
    for token in text.split():
        try:
            value = int(token, 10)
        except ValueError:
            raise ParseError(f"not an integer: {token!r}") from None
        if not INT64_MIN <= value <= INT64_MAX:
            raise ParseError(f"integer out of 64-bit range: {token}")
        values.append(value)
    return tuple(values)


def read_elements(path: Optional[str]) -> Tuple[int, ...]:
    """从文件参数或标准输入读取输入数组（'-' 表示标准输入）"""
    if path is None or path == "-":
        return parse_elements(sys.stdin.read())
    file_path = Path(path)
    if not file_path.is_file():
        raise ParseError(f"input file not found: {path}")
    return parse_elements(file_path.read_text(encoding="utf-8"))


def resolve_seed(seed: Optional[int]) -> int:
    """--seed 优先，其次 RELUCTANT_SEED / config.yaml"""
    value = settings.seed if seed is None else seed
    if not 0 <= value <= UINT64_MAX:
        raise UsageError(f"seed {value} outside the 64-bit unsigned range")
    return value


def add_algorithm_argument(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--alg", required=True, type=AlgorithmId.from_name,
                        help="exposort | cubesort | insertionsort | stoogesort | slowsort | bogosort")


def add_seed_argument(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--seed", type=int, default=None, help="随机种子，缺省取 RELUCTANT_SEED")


def add_input_arguments(parser: argparse.ArgumentParser) -> None:
    """run/trace 共用参数"""
    add_algorithm_argument(parser)
    parser.add_argument("input", nargs="?", default=None, help="整数文件，缺省读取标准输入")
    parser.add_argument("--budget", type=int, default=None,
                        help="比较次数上限（BogoSort 为置乱次数上限）")
    add_seed_argument(parser)
    parser.add_argument("--i-have-time", dest="allow_slow", action="store_true",
                        help="放行超出默认守卫的规模")


def write_json(payload: Any) -> None:
    sys.stdout.write(json.dumps(payload, indent=2) + "\n")


def execute(args: argparse.Namespace, schema: Type[Union[TraceSchema, RunSchema]]) -> int:
    """run/trace 的公共流程：读输入、排序、输出 JSON

    预算耗尽时输出计数快照并返回 EXIT_BUDGET。
    """
    values = read_elements(args.input)
    seed = resolve_seed(args.seed)
    if args.budget is not None and args.budget < 1:
        raise UsageError(f"--budget must be >= 1, got {args.budget}")
    run = SortRun(
        input=values,
        algorithm=args.alg,
        budget=args.budget,
        seed=seed,
        allow_slow=args.allow_slow,
    )
    # 只有 BogoSort 使用种子
    shown_seed = seed if run.algorithm is AlgorithmId.BOGO_SORT else None
    try:
        outcome = run_sort(run)
    except BudgetExceeded as e:
        write_json(BudgetErrorSchema.from_counters(run, e.counters, e.limit, shown_seed).model_dump())
        return EXIT_BUDGET
    write_json(schema.from_outcome(run, outcome, shown_seed).model_dump())
    return EXIT_OK
