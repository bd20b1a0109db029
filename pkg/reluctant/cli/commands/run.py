"""run 命令：排序并输出结果、计数与轨迹"""

import argparse

from reluctant.cli.commands.common import add_input_arguments, execute
from reluctant.models.schemas import RunSchema


def cmd_run(args: argparse.Namespace) -> int:
    return execute(args, RunSchema)


def register(subparsers) -> None:
    parser = subparsers.add_parser("run", help="运行一次排序，输出 JSON")
    add_input_arguments(parser)
    parser.set_defaults(handler=cmd_run)
