#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
工具类模块 - 配置管理

负责加载和管理应用的配置信息，包括计算预算、实数精度和并行线程数。
"""

import json
import threading
from pathlib import Path
from typing import Optional, Union

from loguru import logger
from pydantic import BaseModel, Field

from src.utils.exceptions import ConfigurationError


class AppConfig(BaseModel):
    """应用配置类"""
    # 基本配置
    app_name: str = Field(default="subdyn", description="应用名称")
    log_level: str = Field(default="WARNING", description="日志级别")
    log_dir: Optional[str] = Field(default=None, description="日志文件目录，None表示只输出到控制台")

    # Gröbner基与结式配置
    groebner_pair_budget: int = Field(default=10**6, ge=1, description="单次Gröbner基计算允许处理的S对数量上限")
    resultant_retries: int = Field(default=8, ge=0, description="结式退化时通用坐标变换的重试次数")

    # 实数计算配置
    real_precision_bits: int = Field(default=80, ge=80, description="高精度实数的二进制位数")
    factorial_exact_limit: int = Field(default=10**4, ge=1, description="精确计算阶乘对数的上限，超过则使用Stirling上界")

    # 轨道与搜索配置
    orbit_max_steps: int = Field(default=64, ge=1, description="轨道迭代的默认最大步数")
    search_candidate_budget: int = Field(default=10**5, ge=1, description="前周期搜索允许枚举的候选数量上限")
    threads: int = Field(default=1, ge=1, description="搜索与枚举使用的线程数")
    seed: int = Field(default=20240101, description="随机数种子（坐标变换与抽样）")


_active_config: Optional[AppConfig] = None
_active_lock = threading.Lock()


def get_default_config() -> AppConfig:
    """获取默认配置

    Returns:
        默认配置对象
    """
    return AppConfig()


def get_active_config() -> AppConfig:
    """获取当前生效的配置，未设置时返回默认配置"""
    global _active_config
    with _active_lock:
        if _active_config is None:
            _active_config = get_default_config()
        return _active_config


def set_active_config(config: AppConfig) -> None:
    """设置当前生效的配置

    Args:
        config: 配置对象
    """
    global _active_config
    with _active_lock:
        _active_config = config
    logger.debug(f"已切换生效配置: {config}")


def load_config(config_path: Optional[Union[str, Path]] = None) -> AppConfig:
    """加载配置

    Args:
        config_path: 配置文件路径，如果为None则使用默认配置

    Returns:
        配置对象

    Raises:
        ConfigurationError: 配置加载错误
    """
    # 如果未指定配置文件，则使用默认配置
    if not config_path:
        return get_default_config()

    config_path = Path(config_path)
    if not config_path.exists():
        logger.warning(f"配置文件不存在: {config_path}，将使用默认配置")
        return get_default_config()

    try:
        with open(config_path, "r", encoding="utf-8") as f:
            config_data = json.load(f)

        config = AppConfig(**config_data)
        logger.info(f"成功加载配置文件: {config_path}")
        return config

    except json.JSONDecodeError as e:
        error_msg = f"配置文件格式错误: {str(e)}"
        logger.error(error_msg)
        raise ConfigurationError(error_msg) from e
    except Exception as e:
        error_msg = f"加载配置文件失败: {str(e)}"
        logger.error(error_msg)
        raise ConfigurationError(error_msg) from e


def save_config(config: AppConfig, config_path: Union[str, Path]) -> None:
    """保存配置到文件

    Args:
        config: 配置对象
        config_path: 配置文件路径

    Raises:
        ConfigurationError: 配置保存错误
    """
    config_path = Path(config_path)
    config_path.parent.mkdir(parents=True, exist_ok=True)

    try:
        with open(config_path, "w", encoding="utf-8") as f:
            json.dump(config.model_dump(), f, ensure_ascii=False, indent=2)
        logger.info(f"成功保存配置文件: {config_path}")

    except Exception as e:
        error_msg = f"保存配置文件失败: {str(e)}"
        logger.error(error_msg)
        raise ConfigurationError(error_msg) from e
