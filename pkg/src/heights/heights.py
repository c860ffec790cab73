#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
高度模块 - 子簇高度

h(X) 定义为 Chow 形式作为多项式的高度。
"""

import mpmath
from loguru import logger

from src.algebra.polynomial import poly_height
from src.chow.chow_form import chow_form
from src.dynamics.subvariety import Subvariety
from src.utils.config import get_active_config
from src.utils.exceptions import PreconditionError, UnsupportedCaseError


def variety_height(X: Subvariety, budget=None) -> mpmath.mpf:
    """有理子簇的高度 h(Ch(X))，对生成元的缩放不变"""
    if not X.field.is_rationals:
        raise UnsupportedCaseError(f"子簇高度只对有理系数定义，当前域: {X.field.label()}")
    value = poly_height(chow_form(X, budget).form)
    logger.debug(f"h({X}) = {mpmath.nstr(value, 15)}")
    return value


def height_difference_bound(C, D: int, d: int, N: int, t: int) -> mpmath.mpf:
    """|ĥ(X) - h(X)| 的上界 C·D / ((d-1)·d^{N-t-1})"""
    if d < 2:
        raise PreconditionError(f"要求 d ≥ 2: d={d}")
    if not 1 <= t <= N:
        raise PreconditionError(f"余维数必须满足 1 ≤ t ≤ N: t={t}, N={N}")
    with mpmath.workprec(get_active_config().real_precision_bits):
        return mpmath.mpf(C) * D / ((d - 1) * mpmath.power(d, N - t - 1))
