"""bench 命令：按 (n, trial) 扫描并输出 CSV"""

import argparse
import sys

from reluctant.cli.commands.common import EXIT_OK, add_algorithm_argument, add_seed_argument, resolve_seed
from reluctant.core.config import settings
from reluctant.core.exceptions import UsageError
from reluctant.models.domain import CountCase
from reluctant.services import bench_service

CASES = [c.value for c in CountCase]


def cmd_bench(args: argparse.Namespace) -> int:
    if args.workers < 1:
        raise UsageError(f"--workers must be >= 1, got {args.workers}")
    rows = bench_service.sweep(
        algorithm=args.alg,
        case=CountCase(args.case),
        n_min=args.n_min,
        n_max=args.n_max,
        trials=args.trials,
        seed=resolve_seed(args.seed),
        workers=args.workers,
        allow_slow=args.allow_slow,
        timing=not args.no_timing,
    )
    sys.stdout.write(bench_service.to_csv(rows))
    return EXIT_OK


def register(subparsers) -> None:
    parser = subparsers.add_parser("bench", help="扫描规模区间，输出 CSV")
    add_algorithm_argument(parser)
    parser.add_argument("--case", choices=CASES, default=CountCase.SORTED.value, help="输入形态")
    parser.add_argument("--n-min", type=int, default=2, help="最小规模（n = 1 时计数为 0，无法拟合）")
    parser.add_argument("--n-max", type=int, required=True, help="最大规模")
    parser.add_argument("--trials", type=int, default=settings.bench_trials, help="每个规模的试验次数")
    add_seed_argument(parser)
    parser.add_argument("--workers", type=int, default=settings.bench_workers, help="并行进程数")
    parser.add_argument("--no-timing", action="store_true", help="elapsed_ns 一律写 0")
    parser.add_argument("--i-have-time", dest="allow_slow", action="store_true",
                        help="放行 ExpoSort 超出守卫的 n-max")
    parser.set_defaults(handler=cmd_bench)
