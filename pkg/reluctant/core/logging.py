"""日志配置模块"""

import logging
import sys
from typing import Optional, Union

from reluctant.core.config import settings


def setup_logging(
    level: Union[int, str] = logging.INFO,
    format_string: Optional[str] = None
) -> logging.Logger:
    """配置应用日志

    标准输出留给 JSON/CSV，日志一律写到标准错误。

    Args:
        level: 日志级别
        format_string: 日志格式字符串

    Returns:
        logging.Logger: 配置好的日志记录器
    """
    if format_string is None:
        format_string = "[%(asctime)s] %(levelname)s [%(name)s] %(message)s"

    logging.basicConfig(
        level=level,
        format=format_string,
        handlers=[
            logging.StreamHandler(sys.stderr)
        ]
    )

    app_logger = logging.getLogger("reluctant")
    app_logger.setLevel(level)
    return app_logger


# 全局日志实例
logger = setup_logging(settings.log_level)
