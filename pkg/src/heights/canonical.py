#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
高度模块 - 超曲面的典范高度

ĥ(X) 用 deg(X)/deg(f^n(X)) · h(f^n(X))/d^n 近似，截断误差取 Cauchy 尾
C·deg(X)² / (d^n·(1 - 1/d))，C 为显式常数。轨道进入循环后迭代按循环延拓，
不再重复计算正像。
"""

from typing import Dict, List, Optional

import mpmath
from loguru import logger
from pydantic import BaseModel, ConfigDict, Field

from src.dynamics.morphism import Morphism
from src.dynamics.orbit import iterate_orbit
from src.dynamics.subvariety import Subvariety
from src.heights.constants import height_constant_C
from src.heights.heights import variety_height
from src.utils.config import get_active_config
from src.utils.exceptions import DegenerateImageError, PreconditionError, UnsupportedCaseError


class HeightEstimate(BaseModel):
    """典范高度的近似值与误差界"""
    model_config = ConfigDict(arbitrary_types_allowed=True)

    value: mpmath.mpf = Field(..., description="近似值（自然对数）")
    error_bound: mpmath.mpf = Field(..., description="与极限之差的上界")
    iterations: int = Field(..., description="使用的迭代次数 n")
    degrees: List[int] = Field(default_factory=list, description="f^0(X), ..., f^n(X) 的次数")
    constant: mpmath.mpf = Field(..., description="误差界使用的常数 C")


def error_bound(C, degree: int, d: int, n: int) -> mpmath.mpf:
    """C·deg(X)² / (d^n·(1 - 1/d))"""
    with mpmath.workprec(get_active_config().real_precision_bits):
        d = mpmath.mpf(d)
        return mpmath.mpf(C) * degree ** 2 / (d ** n * (1 - 1 / d))


def estimate_from_iterate(X_degree: int, iterate: Subvariety, n: int, d: int, C,
                          degrees: Optional[List[int]] = None, height=None) -> HeightEstimate:
    """由第 n 个迭代计算典范高度的近似值"""
    if not iterate.is_hypersurface():
        error_msg = f"第 {n} 个迭代不是超曲面: {iterate}"
        logger.error(error_msg)
        raise DegenerateImageError(error_msg)
    if height is None:
        height = variety_height(iterate)
    with mpmath.workprec(get_active_config().real_precision_bits):
        value = mpmath.mpf(X_degree) / iterate.degree * height / mpmath.mpf(d) ** n
    return HeightEstimate(value=value, error_bound=error_bound(C, X_degree, d, n), iterations=n,
                          degrees=list(degrees or []), constant=mpmath.mpf(C))


def _check_inputs(f: Morphism, X: Subvariety, iters: int):
    if not f.field.is_rationals or not X.field.is_rationals:
        raise UnsupportedCaseError("典范高度只对有理系数的态射与子簇定义")
    if f.d < 2:
        raise PreconditionError(f"典范高度要求态射次数 d ≥ 2: d={f.d}")
    if iters < 0:
        raise PreconditionError(f"迭代次数必须非负: {iters}")
    if not X.is_hypersurface():
        raise UnsupportedCaseError(f"典范高度只对超曲面实现: {X}")


def canonical_height_sequence(f: Morphism, X: Subvariety, iters: int, budget=None,
                              constant=None) -> List[HeightEstimate]:
    """n = 0, ..., iters 的全部近似值，只计算一遍轨道

    Args:
        f: 有理系数态射（d ≥ 2）
        X: 有理超曲面
        iters: 最大迭代次数
        budget: 每次正像的 S 对预算
        constant: 误差界使用的常数 C，默认用显式常数在 h(f) 处的值

    Returns:
        长度为 iters + 1 的近似值列表
    """
    _check_inputs(f, X, iters)
    D0 = X.degree
    C = constant if constant is not None else height_constant_C(f.N, f.d, D0, f.height).value

    iterates = [X]
    tail = period = None
    if iters:
        report = iterate_orbit(f, X, max_steps=iters, budget=budget)
        iterates = report.iterates
        tail, period = report.tail, report.period

    heights: Dict[str, mpmath.mpf] = {}
    degrees: List[int] = []
    estimates = []
    for n in range(iters + 1):
        if n < len(iterates):
            current = iterates[n]
        else:
            current = iterates[tail + (n - tail) % period]
        key = current.canonical_key()
        if key not in heights:
            heights[key] = variety_height(current)
        degrees.append(current.degree)
        estimates.append(estimate_from_iterate(D0, current, n, f.d, C, degrees, heights[key]))
    logger.info(f"典范高度: {X} 迭代 {iters} 次 -> {mpmath.nstr(estimates[-1].value, 15)}")
    return estimates


def canonical_height(f: Morphism, X: Subvariety, iters: int, budget=None) -> HeightEstimate:
    """超曲面典范高度在第 iters 次迭代处的近似值与截断误差"""
    return canonical_height_sequence(f, X, iters, budget)[-1]
