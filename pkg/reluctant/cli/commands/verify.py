"""verify 命令：运行性质套件并输出通过/失败表"""

import argparse
import sys

from reluctant.cli.commands.common import EXIT_ERROR, EXIT_OK, add_seed_argument, resolve_seed
from reluctant.core.config import settings
from reluctant.core.exceptions import UsageError
from reluctant.services import verify_service


def cmd_verify(args: argparse.Namespace) -> int:
    if not 1 <= args.max_n <= settings.permutation_max_n:
        raise UsageError(f"--max-n must be in [1, {settings.permutation_max_n}], got {args.max_n}")
    if args.random_inputs is not None and args.random_inputs < 0:
        raise UsageError(f"--random-inputs must be >= 0, got {args.random_inputs}")
    if args.random_expo_max_n is not None and not 1 <= args.random_expo_max_n <= settings.expo_max_n:
        raise UsageError(
            f"--random-expo-max-n must be in [1, {settings.expo_max_n}], got {args.random_expo_max_n}")
    results = verify_service.verify(
        max_n=args.max_n,
        seed=resolve_seed(args.seed),
        random_inputs=args.random_inputs,
        random_expo_max_n=args.random_expo_max_n,
    )
    sys.stdout.write(verify_service.format_table(results) + "\n")
    return EXIT_OK if verify_service.all_passed(results) else EXIT_ERROR


def register(subparsers) -> None:
    parser = subparsers.add_parser("verify", help="验证排序性质")
    parser.add_argument("--max-n", type=int, default=settings.verify_max_n, help="穷举的最大规模")
    add_seed_argument(parser)
    parser.add_argument("--random-inputs", type=int, default=None, help="随机输入个数")
    parser.add_argument("--random-expo-max-n", type=int, default=None,
                        help="随机输入交给 ExpoSort 时的规模上限（完整扫描：1000 个输入、上限 20）")
    parser.set_defaults(handler=cmd_verify)
