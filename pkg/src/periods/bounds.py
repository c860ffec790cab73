#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
周期模块 - 计数界与好约化周期界

剩余域上的候选 Chow 形式个数、指数界 e、群的阶、Veronese 维数，
以及 n ≤ s·m·r·p^⌊e⌋ 与粗糙界 #P^N(F_q)·#GL_{M+1}(F_q)·p^⌊e⌋。
"""

from math import comb
from typing import Optional, Tuple

import mpmath
from loguru import logger
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator
from sympy import factorint, isprime

from src.utils.config import get_active_config
from src.utils.exceptions import InvalidPrimeError, PreconditionError


def check_prime_power(q: int):
    if not isinstance(q, int) or q < 2 or len(factorint(q)) != 1:
        error_msg = f"剩余域的大小必须是素数幂: {q}"
        logger.error(error_msg)
        raise PreconditionError(error_msg)


def projective_point_count(q: int, n: int) -> int:
    """#P^n(F_q) = (q^{n+1} - 1)/(q - 1)"""
    return (q ** (n + 1) - 1) // (q - 1)


def general_linear_order(q: int, n: int) -> int:
    """#GL_n(F_q) = ∏_{i=0}^{n-1} (q^n - q^i)"""
    order = 1
    for i in range(n):
        order *= q ** n - q ** i
    return order


def group_counts(q: int, M: int, N: int) -> Tuple[int, int]:
    """(#GL_{M+1}(F_q), #P^N(F_q))"""
    check_prime_power(q)
    if M < 0 or N < 0:
        raise PreconditionError(f"要求 M, N ≥ 0: M={M}, N={N}")
    return general_linear_order(q, M + 1), projective_point_count(q, N)


def veronese_dimension(N: int, D: int) -> int:
    """M = C(N+D, N) - 1"""
    if N < 1 or D < 1:
        raise PreconditionError(f"要求 N, D ≥ 1: N={N}, D={D}")
    return comb(N + D, N) - 1


def chow_coordinate_count(N: int, t: int, D: int) -> int:
    """余维数 t、次数 D 的 Chow 形式的系数个数（Plücker 坐标中的 D 次单项式个数）"""
    plucker = comb(N + 1, N - t + 1)
    return comb(plucker + D - 1, D)


def lemma_m_count_bound(q: int, N: int, t: int, D: int) -> int:
    """剩余域上次数不超过 D、余维数 t 的候选 Chow 形式个数 Σ_{D'} #P^{count-1}(F_q)

    t = 1 时系数个数为 C(N+D', N)；t > 1 时取 Plücker 坐标中的单项式个数。
    """
    check_prime_power(q)
    if not 1 <= t <= N or D < 1:
        raise PreconditionError(f"要求 1 ≤ t ≤ N 且 D ≥ 1: t={t}, N={N}, D={D}")
    total = sum(projective_point_count(q, chow_coordinate_count(N, t, Dp) - 1) for Dp in range(1, D + 1))
    logger.debug(f"候选Chow形式个数: q={q}, N={N}, t={t}, D={D} -> {total}")
    return total


def _snap(value: mpmath.mpf, bits: int) -> mpmath.mpf:
    """与整数的差在舍入误差以内时取该整数"""
    nearest = mpmath.nint(value)
    if abs(value - nearest) < mpmath.mpf(2) ** (16 - bits):
        return nearest
    return value


def e_bound(p: int, v: int) -> Tuple[mpmath.mpf, int]:
    """好约化周期界中 p 的指数界 e 及其下取整

    p ≠ 2: 1 + log_2(v)；p = 2: 1 + log_α((√5·v + √(5v² + 4))/2)，α 为黄金分割比。
    """
    if not isinstance(p, int) or not isprime(p):
        raise InvalidPrimeError(f"p 必须是素数: {p}")
    if v < 1:
        raise PreconditionError(f"分歧指数必须至少为1: {v}")
    bits = get_active_config().real_precision_bits
    with mpmath.workprec(bits):
        if p != 2:
            value = 1 + mpmath.log(v, 2)
        else:
            sqrt5 = mpmath.sqrt(5)
            alpha = (1 + sqrt5) / 2
            value = 1 + mpmath.log((sqrt5 * v + mpmath.sqrt(5 * v * v + 4)) / 2, alpha)
        value = _snap(value, bits)
        return value, int(mpmath.floor(value))


class PeriodBoundInput(BaseModel):
    """好约化周期界的输入"""
    p: int = Field(..., description="有理素数")
    v: int = Field(default=1, ge=1, description="p 的分歧指数")
    m: int = Field(..., ge=1, description="剩余域上的周期")
    r: Optional[int] = Field(default=None, ge=1, description="乘子的阶，未知时为 None")
    s: int = Field(default=1, ge=1, description="扩张指数")
    N: int = Field(..., ge=1)
    D: int = Field(default=1, ge=1)
    t: int = Field(default=1, ge=1)
    d: int = Field(default=2, ge=1)
    q: Optional[int] = Field(default=None, description="剩余域大小，默认为 p")
    M: Optional[int] = Field(default=None, ge=0, description="GL 的维数减一，默认为 Veronese 维数")

    @field_validator("p")
    @classmethod
    def _prime(cls, value: int) -> int:
        if not isprime(value):
            raise ValueError(f"p 必须是素数: {value}")
        return value

    @model_validator(mode="after")
    def _defaults(self) -> "PeriodBoundInput":
        if self.q is None:
            self.q = self.p
        if self.M is None:
            self.M = veronese_dimension(self.N, self.D)
        return self


class PeriodBoundReport(BaseModel):
    """周期界的全部中间量"""
    model_config = ConfigDict(arbitrary_types_allowed=True)

    s: int
    m: int
    r: int = Field(..., description="实际使用的 r")
    r_substituted: bool = Field(..., description="r 是否用 #GL_{M+1}(F_q) 代替")
    p: int
    v: int
    q: int
    M: int
    e_real: mpmath.mpf
    e_floor: int
    p_power: int = Field(..., description="p^⌊e⌋")
    projective_points: int = Field(..., description="#P^N(F_q)")
    gl_order: int = Field(..., description="#GL_{M+1}(F_q)")
    bound: int = Field(..., description="s·m·r·p^⌊e⌋")
    coarse_cap: int = Field(..., description="#P^N(F_q)·#GL_{M+1}(F_q)·p^⌊e⌋")


def period_bound(inp: PeriodBoundInput) -> PeriodBoundReport:
    """好约化周期界 n ≤ s·m·r·p^⌊e⌋，r 未知时用 #GL_{M+1}(F_q) 代替"""
    e_real, e_floor = e_bound(inp.p, inp.v)
    gl_order, points = group_counts(inp.q, inp.M, inp.N)
    r = inp.r if inp.r is not None else gl_order
    p_power = inp.p ** e_floor
    report = PeriodBoundReport(
        s=inp.s, m=inp.m, r=r, r_substituted=inp.r is None, p=inp.p, v=inp.v, q=inp.q, M=inp.M,
        e_real=e_real, e_floor=e_floor, p_power=p_power, projective_points=points, gl_order=gl_order,
        bound=inp.s * inp.m * r * p_power, coarse_cap=points * gl_order * p_power,
    )
    logger.info(f"周期界: {report.bound}，粗糙界 {report.coarse_cap}")
    return report
