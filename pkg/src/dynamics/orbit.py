#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
动力学模块 - 轨道迭代

反复计算正像，对每个迭代取规范形式，用哈希表检测第一次重复，
得到前周期长度（尾长）与周期。
"""

from typing import Dict, List, Optional

from loguru import logger
from pydantic import BaseModel, ConfigDict, Field

from src.dynamics.images import forward_image
from src.dynamics.morphism import Morphism
from src.dynamics.subvariety import Subvariety
from src.utils.config import get_active_config
from src.utils.exceptions import PreconditionError


class OrbitStep(BaseModel):
    """轨道中的一个迭代"""
    index: int = Field(..., description="迭代序号")
    degree: int = Field(..., description="子簇次数")
    dimension: int = Field(..., description="射影维数")
    key: str = Field(..., description="规范形式的摘要")
    basis: List[str] = Field(..., description="规范基的打印文本")


class OrbitReport(BaseModel):
    """轨道报告"""
    model_config = ConfigDict(arbitrary_types_allowed=True)

    tail: Optional[int] = Field(default=None, description="进入循环前的步数")
    period: Optional[int] = Field(default=None, description="周期，未在预算内重复时为None")
    steps: List[OrbitStep] = Field(default_factory=list, description="各迭代的数据")
    stopped_by_degree_cap: bool = Field(default=False, description="是否因次数上限停止")
    iterates: List[Subvariety] = Field(default_factory=list, exclude=True, description="各迭代的子簇")

    @property
    def degrees(self) -> List[int]:
        return [step.degree for step in self.steps]


def _step(index: int, variety: Subvariety) -> OrbitStep:
    dimension, degree = variety.dimension_degree()
    return OrbitStep(
        index=index,
        degree=degree,
        dimension=dimension,
        key=variety.canonical_key(),
        basis=[str(g) for g in variety.canonical_basis()],
    )


def iterate_orbit(f: Morphism, X: Subvariety, max_steps: Optional[int] = None,
                  degree_cap: Optional[int] = None, budget=None) -> OrbitReport:
    """迭代子簇的轨道并检测循环

    Args:
        f: 射影态射
        X: 初始子簇
        max_steps: 最多计算的正像次数，None 表示使用当前配置
        degree_cap: 迭代次数超过该值时停止（周期记为 None）
        budget: 每次正像计算的 S 对预算

    Returns:
        轨道报告；iterate(tail) 与 iterate(tail + period) 为同一子簇
    """
    if max_steps is None:
        max_steps = get_active_config().orbit_max_steps
    if max_steps < 1:
        raise PreconditionError(f"最大步数必须至少为1: {max_steps}")

    report = OrbitReport()
    seen: Dict[str, int] = {}
    current = X
    for index in range(max_steps + 1):
        if index:
            current = forward_image(f, current, budget)
        step = _step(index, current)
        report.steps.append(step)
        report.iterates.append(current)

        if step.key in seen:
            report.tail = seen[step.key]
            report.period = index - report.tail
            logger.info(f"检测到循环: 尾长 {report.tail}，周期 {report.period}")
            return report
        seen[step.key] = index

        if degree_cap is not None and step.degree > degree_cap:
            report.stopped_by_degree_cap = True
            logger.debug(f"第 {index} 步次数 {step.degree} 超过上限 {degree_cap}")
            return report

    logger.warning(f"{max_steps} 步内未检测到循环")
    return report
