"""配置管理模块"""

import os
from pathlib import Path
from typing import Any, Dict

import yaml
from pydantic_settings import BaseSettings

# 项目根目录（config.yaml 所在目录）
PROJECT_ROOT = Path(__file__).parent.parent.parent.resolve()

ENV_PREFIX = "RELUCTANT_"


class Settings(BaseSettings):
    """应用配置类"""

    # 随机种子（--seed 未给出时的默认值）
    seed: int = 0

    # 排序守卫
    expo_max_n: int = 26
    bogo_max_shuffles: int = 10_000_000
    permutation_max_n: int = 10

    # 基准测试
    bench_trials: int = 1
    bench_workers: int = 1

    # 性质验证
    verify_max_n: int = 8
    verify_bogo_max_n: int = 5
    verify_multiset_max_n: int = 6
    verify_random_inputs: int = 200
    verify_random_max_n: int = 64
    verify_random_expo_max_n: int = 16

    # 输出
    show_progress: bool = True
    log_level: str = "WARNING"

    class Config:
        env_prefix = ENV_PREFIX
        env_file = ".env"
        env_file_encoding = "utf-8"


# YAML 段落 -> Settings 字段
_YAML_KEYS = {
    "seed": ("sorts", "seed"),
    "expo_max_n": ("sorts", "expo_max_n"),
    "bogo_max_shuffles": ("sorts", "bogo_max_shuffles"),
    "permutation_max_n": ("sorts", "permutation_max_n"),
    "bench_trials": ("bench", "trials"),
    "bench_workers": ("bench", "workers"),
    "verify_max_n": ("verify", "max_n"),
    "verify_bogo_max_n": ("verify", "bogo_max_n"),
    "verify_multiset_max_n": ("verify", "multiset_max_n"),
    "verify_random_inputs": ("verify", "random_inputs"),
    "verify_random_max_n": ("verify", "random_max_n"),
    "verify_random_expo_max_n": ("verify", "random_expo_max_n"),
    "show_progress": ("logging", "show_progress"),
    "log_level": ("logging", "level"),
}


def load_config_from_yaml(config_path: Path = PROJECT_ROOT / "config.yaml") -> Settings:
    """从YAML文件加载配置

    环境变量（RELUCTANT_*）已设置的字段保留给环境变量。

    Args:
        config_path: 配置文件路径

    Returns:
        Settings: 配置对象
    """
    if not Path(config_path).exists():
        return Settings()

    with open(config_path, 'r', encoding='utf-8') as f:
        config_data = yaml.safe_load(f) or {}

    values: Dict[str, Any] = {}
    for field, (section, key) in _YAML_KEYS.items():
        if f"{ENV_PREFIX}{field.upper()}" in os.environ:
            continue
        section_data = config_data.get(section) or {}
        if key in section_data:
            values[field] = section_data[key]

    return Settings(**values)


# 全局配置实例
settings = load_config_from_yaml()
