"""pytest 根配置：包导入路径与测试环境"""

import os
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

# 测试输出里不需要进度条
os.environ.setdefault("RELUCTANT_SHOW_PROGRESS", "false")
