"""fit 命令：读取 bench CSV，输出 FitReport JSON"""

import argparse

from reluctant.cli.commands.common import EXIT_OK, write_json
from reluctant.models.schemas import FitReportSchema, clean_float
from reluctant.services import bench_service, growth_service


def cmd_fit(args: argparse.Namespace) -> int:
    series = bench_service.load_series(args.input, metric=args.metric, n_min=args.n_min)
    report = growth_service.fit(series)
    payload = FitReportSchema.from_report(report).model_dump()
    if args.ratios:
        payload["ratios"] = [[n, clean_float(r)] for n, r in growth_service.ratio_diagnostic(series)]
    write_json(payload)
    return EXIT_OK


def register(subparsers) -> None:
    parser = subparsers.add_parser("fit", help="拟合增长模型")
    parser.add_argument("--input", required=True, help="bench CSV 文件")
    parser.add_argument("--metric", choices=bench_service.COUNT_COLUMNS, default="comparisons",
                        help="参与拟合的计数列")
    parser.add_argument("--n-min", type=int, default=None, help="丢弃 n 较小的点")
    parser.add_argument("--ratios", action="store_true", help="附加相邻比值诊断")
    parser.set_defaults(handler=cmd_fit)
