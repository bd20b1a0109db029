"""命令行主入口"""

import logging
import sys
from typing import List, Optional

from reluctant.cli import create_parser
from reluctant.cli.commands.common import EXIT_BUDGET, EXIT_ERROR
from reluctant.core.exceptions import BudgetExceeded, ReluctantError
from reluctant.core.logging import logger


def main(argv: Optional[List[str]] = None) -> int:
    """解析参数并执行子命令

    Args:
        argv: 参数列表，缺省取 sys.argv[1:]

    Returns:
        int: 退出码（0 成功，1 用法/输入/验证失败，2 预算耗尽）
    """
    parser = create_parser()
    try:
        args = parser.parse_args(argv)
        if args.verbose:
            logger.setLevel(logging.DEBUG)
        logger.debug(f"命令: {args.command}")
        return args.handler(args)
    except BudgetExceeded as e:
        sys.stderr.write(f"error: {e} (counters: {e.counters.to_dict()})\n")
        return EXIT_BUDGET
    except (ReluctantError, ValueError) as e:
        sys.stderr.write(f"error: {e}\n")
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
