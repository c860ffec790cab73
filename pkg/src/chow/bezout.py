#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Chow形式模块 - Bézout次数界

收缩过程结束时自映射所在子簇次数的上界：
∏_{i=0}^{j-1} (d^{mt})^i · (M+1)((d^M·D - d^m)(N-t) + 1)，全部为精确整数运算。
"""

from loguru import logger

from src.utils.exceptions import PreconditionError


def bezout_degree_bound(M: int, D: int, d: int, m: int, t: int, N: int, j: int) -> int:
    """收缩 j 步后子簇次数的 Bézout 上界

    Args:
        M: Chow 簇所在射影空间的维数（显式给出）
        D: 子簇次数
        d: 态射次数
        m: 次数保持的迭代步数
        t: 余维数
        N: 射影空间维数
        j: 收缩步数，j = 0 时返回 Y_1 的次数公式

    Returns:
        精确整数上界
    """
    for name, value in (("M", M), ("D", D), ("d", d), ("m", m), ("t", t), ("N", N)):
        if not isinstance(value, int) or value < 1:
            raise PreconditionError(f"{name} 必须是正整数: {value}")
    if not isinstance(j, int) or j < 0:
        raise PreconditionError(f"收缩步数 j 必须是非负整数: {j}")

    base = (M + 1) * ((d ** M * D - d ** m) * (N - t) + 1)
    if j == 0:
        return base
    step = d ** (m * t)
    bound = 1
    for i in range(j):
        bound *= step ** i * base
    logger.debug(f"Bézout次数界: j={j} -> {bound}")
    return bound
