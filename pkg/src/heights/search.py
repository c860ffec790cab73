#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
高度模块 - 前周期超曲面搜索

枚举次数不超过 D_max、系数在 [-B, B] 中的整系数形式（本原、首项系数为正、
无平方），对每个候选迭代精确轨道。轨道在 iters 步内重复的候选还要通过高度检验：
典范高度近似值减去误差界不超过 0。候选在线程池中并行检验，结果按枚举顺序合并。
"""

from concurrent.futures import ThreadPoolExecutor
from itertools import islice, product
from typing import Iterator, List, Optional

import mpmath
from loguru import logger
from pydantic import BaseModel, ConfigDict, Field

from src.algebra.polynomial import Polynomial, PolyRing, primitive_form, square_free_part
from src.chow.induced_map import tau
from src.dynamics.morphism import Morphism
from src.dynamics.orbit import iterate_orbit
from src.dynamics.subvariety import Subvariety
from src.heights.canonical import estimate_from_iterate
from src.heights.constants import height_constant_C
from src.utils.config import get_active_config
from src.utils.exceptions import BudgetExceededError, PreconditionError, UnsupportedCaseError


class PreperiodicVariety(BaseModel):
    """搜索到的前周期超曲面"""
    model_config = ConfigDict(arbitrary_types_allowed=True)

    variety: Subvariety = Field(..., exclude=True)
    form: str = Field(..., description="定义形式")
    degree: int
    tail: int
    period: int
    estimate: mpmath.mpf = Field(..., description="典范高度近似值")
    error_bound: mpmath.mpf


class SearchReport(BaseModel):
    """搜索结果"""
    candidates: int = Field(default=0, description="检验过的候选数")
    found: List[PreperiodicVariety] = Field(default_factory=list)
    dropped_by_height: int = Field(default=0, description="轨道重复但未通过高度检验的候选数")
    partial: bool = Field(default=False, description="是否因候选预算而截断")


def count_candidates(N: int, D_max: int, coeff_bound: int) -> int:
    """未去重的系数向量个数 Σ_D (2B+1)^{τ(D)}"""
    return sum((2 * coeff_bound + 1) ** tau(N, D) for D in range(1, D_max + 1))


def candidate_forms(ring: PolyRing, D_max: int, coeff_bound: int, limit: Optional[int] = None) -> Iterator[Polynomial]:
    """按次数与系数字典序枚举规范代表（本原、首项系数为正、无平方）"""
    values = range(-coeff_bound, coeff_bound + 1)

    def raw():
        for D in range(1, D_max + 1):
            monomials = ring.monomials_of_degree(D)
            for coeffs in product(values, repeat=len(monomials)):
                yield monomials, coeffs

    for monomials, coeffs in islice(raw(), limit):
        g = ring.from_terms({m: c for m, c in zip(monomials, coeffs) if c})
        if g.is_zero or primitive_form(g) != g or square_free_part(g) != g:
            continue
        yield g


def preperiodic_search(f: Morphism, D_max: int, coeff_bound: int, iters: int,
                       threads: Optional[int] = None, degree_cap: Optional[int] = None,
                       budget=None) -> SearchReport:
    """在有界次数与有界系数的超曲面中搜索前周期者

    Args:
        f: 有理系数态射（d ≥ 2）
        D_max: 最大次数
        coeff_bound: 系数绝对值上界
        iters: 每个候选最多计算的正像次数
        threads: 并行线程数，默认使用当前配置
        degree_cap: 迭代次数超过该值时放弃该候选
        budget: 每次正像的 S 对预算

    Returns:
        按枚举顺序排列的前周期超曲面及其轨道数据

    Raises:
        BudgetExceededError: 候选数超出预算（partial 中带有截断后的结果）
    """
    if not f.field.is_rationals:
        raise UnsupportedCaseError("前周期搜索只对有理系数态射实现")
    if D_max < 1 or coeff_bound < 0 or iters < 1:
        raise PreconditionError(f"要求 D_max ≥ 1、coeff_bound ≥ 0、iters ≥ 1: {D_max}, {coeff_bound}, {iters}")
    if f.d < 2:
        raise PreconditionError(f"前周期搜索要求态射次数 d ≥ 2: d={f.d}")

    config = get_active_config()
    threads = threads or config.threads
    total = count_candidates(f.N, D_max, coeff_bound)
    limit = None
    if total > config.search_candidate_budget:
        limit = config.search_candidate_budget
        logger.warning(f"候选数 {total} 超出预算 {limit}，只检验前 {limit} 个系数向量")

    hf = f.height
    constants = {D: height_constant_C(f.N, f.d, D, hf).value for D in range(1, D_max + 1)}
    candidates = list(candidate_forms(f.ring, D_max, coeff_bound, limit))
    logger.info(f"前周期搜索: {len(candidates)} 个候选，{threads} 个线程")

    def examine(g: Polynomial):
        X = Subvariety.hypersurface(g)
        orbit = iterate_orbit(f, X, max_steps=iters, degree_cap=degree_cap, budget=budget)
        if orbit.period is None:
            return None
        D0 = g.total_degree()
        n = len(orbit.iterates) - 1
        estimate = estimate_from_iterate(D0, orbit.iterates[n], n, f.d, constants[D0], orbit.degrees)
        return X, orbit, estimate

    report = SearchReport(candidates=len(candidates), partial=limit is not None)
    with ThreadPoolExecutor(max_workers=threads) as pool:
        results = list(pool.map(examine, candidates))
    for result in results:
        if result is None:
            continue
        X, orbit, estimate = result
        if estimate.value - estimate.error_bound > 0:
            report.dropped_by_height += 1
            logger.warning(f"{X} 的轨道重复但高度检验未通过")
            continue
        report.found.append(PreperiodicVariety(
            variety=X, form=str(X.hypersurface_form()), degree=X.degree,
            tail=orbit.tail, period=orbit.period,
            estimate=estimate.value, error_bound=estimate.error_bound,
        ))

    logger.info(f"找到 {len(report.found)} 个前周期超曲面")
    if report.partial:
        raise BudgetExceededError(f"候选数 {total} 超出预算 {limit}，结果不完整", partial=report)
    return report
