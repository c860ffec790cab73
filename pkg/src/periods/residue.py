#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
周期模块 - 剩余域上的周期

把态射与子簇约化到 F_p 后迭代轨道，得到模 p 周期 m。
需要时再惰性地计算有理轨道的次数，检查各步次数在约化后是否保持。
"""

from typing import List, Optional

from loguru import logger
from pydantic import BaseModel, Field

from src.dynamics.images import forward_image
from src.dynamics.morphism import Morphism
from src.dynamics.orbit import iterate_orbit
from src.dynamics.reduction import reduce_mod_p
from src.dynamics.subvariety import Subvariety
from src.utils.exceptions import BudgetExceededError, PreconditionError


class ResiduePeriodReport(BaseModel):
    """模 p 轨道的结果"""
    p: int
    m: int = Field(..., description="模 p 周期")
    tail: int = Field(..., description="模 p 尾长")
    degrees: List[int] = Field(..., description="模 p 迭代的次数")
    rational_degrees: Optional[List[int]] = Field(default=None, description="有理迭代的次数")
    degrees_match: Optional[bool] = Field(default=None, description="各步次数是否与有理迭代一致")


def _reduce(f: Morphism, X: Subvariety, p: int):
    if f.field.is_prime_field:
        if f.field.characteristic != p or X.field != f.field:
            raise PreconditionError(f"对象已在 {f.field.label()} 上，与 p={p} 不一致")
        return f, X
    return reduce_mod_p(f, p), reduce_mod_p(X, p)


def residue_period(f: Morphism, X: Subvariety, p: int, max_steps: Optional[int] = None,
                   check_degrees: bool = False, budget=None) -> ResiduePeriodReport:
    """子簇模 p 约化后的周期

    Args:
        f: 有理系数态射（或已在 F_p 上）
        X: 子簇
        p: 好约化素数
        max_steps: 模 p 轨道的最大步数
        check_degrees: 是否同时计算有理轨道并比较次数
        budget: 正像的 S 对预算

    Raises:
        BadReductionError: f 在 p 处坏约化或 X 的生成元约化为零
        BudgetExceededError: 步数内没有出现循环
    """
    fp, Xp = _reduce(f, X, p)
    orbit = iterate_orbit(fp, Xp, max_steps=max_steps, budget=budget)
    if orbit.period is None:
        error_msg = f"模 {p} 轨道在 {len(orbit.steps) - 1} 步内没有出现循环"
        logger.error(error_msg)
        raise BudgetExceededError(error_msg, partial=orbit)

    report = ResiduePeriodReport(p=p, m=orbit.period, tail=orbit.tail, degrees=orbit.degrees)
    if check_degrees and not f.field.is_prime_field:
        rational = [X.degree]
        current = X
        # 遇到第一个不一致的次数即停止
        while rational[-1] == orbit.degrees[len(rational) - 1] and len(rational) < len(orbit.degrees):
            current = forward_image(f, current, budget)
            rational.append(current.degree)
        report.rational_degrees = rational
        report.degrees_match = rational == orbit.degrees
        if not report.degrees_match:
            logger.warning(f"约化改变了迭代的次数: 有理 {rational}，模 {p} {orbit.degrees}")
    logger.info(f"模 {p} 周期 m = {report.m}，尾长 {report.tail}")
    return report
