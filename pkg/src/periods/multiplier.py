#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
周期模块 - 乘子的阶

在周期点所在的仿射图中取 ψ^n 去齐次化后的 Jacobian 矩阵，
在 GL(F_q) 中按群阶的素因子分解逐个下降求其乘法阶。
"""

from typing import Optional, Sequence

from loguru import logger
from sympy import factorint
from sympy.polys.matrices import DomainMatrix

from src.algebra.polynomial import partial_derivative
from src.dynamics.morphism import Morphism
from src.periods.bounds import general_linear_order
from src.utils.exceptions import PreconditionError, UnsupportedCaseError


def jacobian_at(psi: Morphism, point: Sequence, chart: int) -> DomainMatrix:
    """ψ 在仿射图 x_chart = 1 中的 Jacobian 矩阵（point 已规范化为 point[chart] = 1）"""
    K = psi.field.domain
    denominator = psi.coords[chart]
    g_i = denominator.evaluate(point)
    others = [j for j in range(psi.ring.ngens) if j != chart]
    rows = []
    for j in others:
        g_j = psi.coords[j].evaluate(point)
        row = []
        for k in others:
            var = psi.ring.variables[k]
            d_j = partial_derivative(psi.coords[j], var).evaluate(point)
            d_i = partial_derivative(denominator, var).evaluate(point)
            row.append((d_j * g_i - g_j * d_i) / (g_i * g_i))
        rows.append(row)
    return DomainMatrix(rows, (len(others), len(others)), K)


def matrix_order(J: DomainMatrix, q: int) -> int:
    """可逆矩阵在 GL_n(F_q) 中的乘法阶"""
    n = J.shape[0]
    identity = DomainMatrix.eye(n, J.domain)
    order = general_linear_order(q, n)
    for prime, exponent in factorint(order).items():
        for _ in range(exponent):
            if (J ** (order // prime)) == identity:
                order //= prime
            else:
                break
    return order


def multiplier_order(psi: Morphism, point: Sequence, period: int) -> Optional[int]:
    """周期点处乘子的乘法阶 r

    Args:
        psi: F_p 上的态射
        point: 周期点的齐次坐标
        period: 周期 n_P

    Returns:
        ψ^{n_P} 在该点的 Jacobian 的阶；Jacobian 奇异时返回 None，由调用者提供 r

    Raises:
        PreconditionError: 点不是给定周期的周期点
    """
    if not psi.field.is_prime_field:
        raise UnsupportedCaseError(f"乘子的阶只对 F_p 上的态射定义，当前域: {psi.field.label()}")
    if period < 1:
        raise PreconditionError(f"周期必须至少为1: {period}")
    field = psi.field
    values = [field.convert(c) for c in point]
    chart = next((i for i, c in enumerate(values) if c), None)
    if chart is None:
        raise PreconditionError("射影点的坐标不能全为零")
    values = [c / values[chart] for c in values]

    iterate = psi.iterate(period)
    image = iterate.apply(values)
    if not image[chart] or any(c != a / image[chart] for c, a in zip(values, image)):
        error_msg = f"点 {tuple(point)} 不是周期为 {period} 的周期点"
        logger.error(error_msg)
        raise PreconditionError(error_msg)

    J = jacobian_at(iterate, values, chart)
    if not J.shape[0]:
        return 1
    if not J.det():
        logger.warning(f"点 {tuple(point)} 处的乘子奇异，需要由调用者提供 r")
        return None
    r = matrix_order(J, field.characteristic)
    logger.info(f"乘子的阶: r = {r}")
    return r
