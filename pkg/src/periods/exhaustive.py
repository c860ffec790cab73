#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
周期模块 - 剩余域上的穷举周期搜索

枚举 F_p 上全部 d 次态射（相差标量倍数的只取首个非零系数为 1 者）与全部
F_p 有理超平面，在次数上限内迭代轨道，记录出现的最大周期及其见证。
规模随 p^{(N+1)τ(d)} 增长，只适合很小的参数；态射个数受候选预算限制。
"""

from concurrent.futures import ThreadPoolExecutor
from itertools import islice, product
from typing import Iterator, List, Optional, Tuple

from loguru import logger
from pydantic import BaseModel, Field

from src.algebra.fields import ScalarField
from src.algebra.polynomial import PolyRing
from src.dynamics.morphism import Morphism
from src.dynamics.orbit import iterate_orbit
from src.dynamics.subvariety import Subvariety
from src.utils.config import get_active_config
from src.utils.exceptions import NotAMorphismError, PreconditionError


class ExhaustiveSearchReport(BaseModel):
    """穷举搜索的结果"""
    p: int
    N: int
    d: int
    degree_cap: int
    morphisms: int = Field(default=0, description="检验过的态射个数")
    hyperplanes: int = Field(default=0, description="每个态射检验的超平面个数")
    max_period: int = Field(default=0, description="出现的最大周期")
    witness_map: Optional[str] = Field(default=None)
    witness_variety: Optional[str] = Field(default=None)
    expected: Optional[int] = Field(default=None, description="期望的最大周期")
    matches: Optional[bool] = Field(default=None)
    partial: bool = Field(default=False, description="是否因候选预算而截断")


def _projective_vectors(p: int, length: int) -> Iterator[Tuple[int, ...]]:
    """F_p^length 中首个非零分量为 1 的向量"""
    for vector in product(range(p), repeat=length):
        lead = next((c for c in vector if c), None)
        if lead == 1:
            yield vector


def _morphisms(ring: PolyRing, d: int) -> Iterator[Morphism]:
    monomials = ring.monomials_of_degree(d)
    width = len(monomials)
    for vector in _projective_vectors(ring.field.characteristic, ring.ngens * width):
        chunks = [vector[i * width:(i + 1) * width] for i in range(ring.ngens)]
        if any(not any(chunk) for chunk in chunks):
            continue
        coords = [ring.from_terms({m: c for m, c in zip(monomials, chunk) if c}) for chunk in chunks]
        try:
            yield Morphism(coords)
        except NotAMorphismError:
            continue


def exhaustive_period_search(p: int, N: int, d: int, degree_cap: int, threads: Optional[int] = None,
                             max_steps: Optional[int] = None, expected: Optional[int] = None,
                             limit: Optional[int] = None) -> ExhaustiveSearchReport:
    """在 F_p 上穷举态射与有理超平面，寻找最大周期

    Args:
        p: 素数
        N: 射影空间维数
        d: 态射次数
        degree_cap: 轨道中迭代次数的上限
        threads: 并行线程数
        max_steps: 每条轨道的最大步数
        expected: 期望的最大周期，不一致时只记录不抛出
        limit: 检验的态射个数上限，默认为候选预算

    Returns:
        最大周期、见证与是否截断
    """
    if N < 1 or d < 1 or degree_cap < 1:
        raise PreconditionError(f"要求 N, d, degree_cap ≥ 1: {N}, {d}, {degree_cap}")
    config = get_active_config()
    threads = threads or config.threads
    limit = limit or config.search_candidate_budget
    field = ScalarField.prime(p)
    ring = PolyRing([f"x{i}" for i in range(N + 1)], field, "grevlex")
    hyperplanes = [Subvariety(ring, [ring.from_terms({m: c for m, c in zip(ring.monomials_of_degree(1), v) if c})])
                   for v in _projective_vectors(p, N + 1)]

    def examine(f: Morphism) -> Tuple[int, Optional[str]]:
        best, witness = 0, None
        for H in hyperplanes:
            orbit = iterate_orbit(f, H, max_steps=max_steps, degree_cap=degree_cap)
            if orbit.period is not None and orbit.period > best:
                best, witness = orbit.period, str(H)
        return best, witness

    morphisms: List[Morphism] = list(islice(_morphisms(ring, d), limit + 1))
    partial = len(morphisms) > limit
    morphisms = morphisms[:limit]
    logger.info(f"穷举搜索: {len(morphisms)} 个态射，{len(hyperplanes)} 个超平面，{threads} 个线程")

    report = ExhaustiveSearchReport(p=p, N=N, d=d, degree_cap=degree_cap, morphisms=len(morphisms),
                                    hyperplanes=len(hyperplanes), expected=expected, partial=partial)
    with ThreadPoolExecutor(max_workers=threads) as pool:
        for f, (best, witness) in zip(morphisms, pool.map(examine, morphisms)):
            if best > report.max_period:
                report.max_period, report.witness_map, report.witness_variety = best, str(f), witness

    if partial:
        logger.warning(f"态射个数超过上限 {limit}，结果不完整")
    if expected is not None:
        report.matches = report.max_period == expected
        if not report.matches:
            logger.warning(f"最大周期 {report.max_period} 与期望值 {expected} 不一致")
    logger.info(f"穷举搜索完成: 最大周期 {report.max_period}")
    return report
