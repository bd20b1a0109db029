"""命令行接口"""

import argparse

from reluctant import __version__
from reluctant.cli.commands import bench, fit, run, trace, verify
from reluctant.core.exceptions import UsageError


class ArgumentParser(argparse.ArgumentParser):
    """参数错误抛出 UsageError，由 main 统一映射为退出码 1"""

    def error(self, message: str):
        raise UsageError(f"{self.prog}: {message}")


def create_parser() -> ArgumentParser:
    """组装各子命令

    Returns:
        ArgumentParser: 顶层解析器
    """
    parser = ArgumentParser(
        prog="reluctant",
        description="慢速排序实验室：精确计数、交换轨迹、性质验证与增长模型拟合",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="store_true", help="输出 DEBUG 日志")

    subparsers = parser.add_subparsers(dest="command", required=True)
    run.register(subparsers)
    trace.register(subparsers)
    bench.register(subparsers)
    fit.register(subparsers)
    verify.register(subparsers)
    return parser
