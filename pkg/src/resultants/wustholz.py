#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
结式模块 - Wustholz高度界

广义结式 Res_{D,d,...,d} 系数高度的上界 exp(B)·B!，B = C(D + N·d^N + 1, N)，
以自然对数返回 B + ln(B!)。
"""

from math import comb, factorial
from typing import Optional

import mpmath
from loguru import logger

from src.utils.config import get_active_config
from src.utils.exceptions import PreconditionError


def log_factorial(B: int, precision: Optional[int] = None) -> mpmath.mpf:
    """ln(B!)

    B 不超过配置的精确上限时先精确计算阶乘再取对数，否则使用 Stirling 上界
    B ln B - B + ½ ln(2πB) + 1/(12B)。
    """
    config = get_active_config()
    bits = precision or config.real_precision_bits
    with mpmath.workprec(bits):
        if B <= 1:
            return mpmath.mpf(0)
        if B <= config.factorial_exact_limit:
            return mpmath.log(mpmath.mpf(factorial(B)))
        b = mpmath.mpf(B)
        logger.debug(f"B={B} 超过精确阶乘上限，使用Stirling上界")
        return b * mpmath.log(b) - b + mpmath.log(2 * mpmath.pi * b) / 2 + 1 / (12 * b)


def wustholz_exponent(N: int, D: int, d: int) -> int:
    """B = C(D + N·d^N + 1, N)"""
    return comb(D + N * d ** N + 1, N)


def wustholz_height_bound(N: int, D: int, d: int, precision: Optional[int] = None) -> mpmath.mpf:
    """广义结式系数高度上界的自然对数 B + ln(B!)

    Args:
        N: 射影空间维数
        D: 超曲面次数
        d: 态射次数

    Returns:
        高精度实数
    """
    if min(N, D, d) < 1:
        raise PreconditionError(f"Wustholz界要求 N, D, d ≥ 1: N={N}, D={D}, d={d}")
    B = wustholz_exponent(N, D, d)
    bits = precision or get_active_config().real_precision_bits
    with mpmath.workprec(bits):
        return mpmath.mpf(B) + log_factorial(B, bits)
