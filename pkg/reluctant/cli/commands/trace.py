"""trace 命令：输出交换轨迹 JSON"""

import argparse

from reluctant.cli.commands.common import add_input_arguments, execute
from reluctant.models.schemas import TraceSchema


def cmd_trace(args: argparse.Namespace) -> int:
    return execute(args, TraceSchema)


def register(subparsers) -> None:
    parser = subparsers.add_parser("trace", help="输出交换轨迹")
    add_input_arguments(parser)
    parser.set_defaults(handler=cmd_trace)
