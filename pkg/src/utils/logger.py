#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
工具类模块 - 日志配置

使用loguru记录日志。日志只写入标准错误和文件，标准输出保留给确定性的计算报告。
每条记录带有子命令名与处理阶段（由 JobProcessor 的阶段装饰器设置）。
"""

import sys
from pathlib import Path

from loguru import logger

CONSOLE_FORMAT = (
    "<green>{time:HH:mm:ss}</green> | <level>{level: <8}</level> | "
    "<cyan>{extra[command]}</cyan>/<cyan>{extra[stage]}</cyan> - <level>{message}</level>"
)
FILE_FORMAT = "{time:YYYY-MM-DD HH:mm:ss.SSS} | {level: <8} | {extra[command]}/{extra[stage]} | " \
              "{name}:{function}:{line} - {message}"


def setup_logger(log_dir=None, log_level="WARNING", command="-"):
    """配置日志系统

    Args:
        log_dir: 日志文件目录，如果为None则只输出到标准错误
        log_level: 日志级别，默认为WARNING
        command: 当前子命令名，写入每条记录并决定日志文件名
    """
    logger.remove()
    logger.configure(extra={"command": command, "stage": "-"})

    logger.add(sys.stderr, format=CONSOLE_FORMAT, level=log_level, colorize=sys.stderr.isatty())

    if log_dir:
        log_dir = Path(log_dir)
        log_dir.mkdir(parents=True, exist_ok=True)

        # 每个子命令一个文件，按大小轮转；错误附带回溯
        logger.add(
            log_dir / f"subdyn_{command}.log",
            format=FILE_FORMAT,
            level=log_level,
            rotation="10 MB",
            retention=5,
            encoding="utf-8",
            backtrace=True,
            diagnose=False,
        )

    logger.debug(f"日志系统初始化完成，级别: {log_level}")
    return logger
