#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
结式模块 - 基于结式的超曲面像

把 y 视为参数，对 x 取 {g, y_j f_i - y_i f_j : j ≠ i} 的 Macaulay 结式，
去掉 y_i 的多余幂后得到 f(V(g)) 的定义形式。所有枢轴都退化时退回 Gröbner 消元。
"""

from functools import reduce
from math import gcd
from typing import Optional

from loguru import logger
from pydantic import BaseModel, ConfigDict, Field

from src.algebra.polynomial import (
    Polynomial,
    flatten_parameters,
    primitive_form,
    square_free_part,
)
from src.dynamics.images import forward_image, graph_ring
from src.dynamics.morphism import Morphism
from src.dynamics.subvariety import Subvariety
from src.resultants.macaulay import ResultantSpec, macaulay_resultant
from src.utils.exceptions import RingMismatchError


class ImageResult(BaseModel):
    """超曲面像的计算结果"""
    model_config = ConfigDict(arbitrary_types_allowed=True)

    form: Polynomial = Field(..., description="像的无平方定义形式")
    raw: Polynomial = Field(..., description="去掉多余因子后的原始结式")
    path: str = Field(..., description="实际使用的算法: resultant 或 groebner")
    pivot: Optional[int] = Field(default=None, description="结式路径使用的枢轴下标")
    raw_degree: int = Field(..., description="原始结式的次数")
    power: int = Field(default=1, description="原始结式是无平方部分的几次幂")


def _strip_variable(p: Polynomial, index: int) -> Polynomial:
    """除去 p 中变量 index 的最高公因幂"""
    lowest = min(m[index] for m in p.monomials())
    if not lowest:
        return p
    terms = {}
    for monom, coeff in p.rep.items():
        shifted = list(monom)
        shifted[index] -= lowest
        terms[tuple(shifted)] = coeff
    return Polynomial(p.ring, p.ring.raw.from_dict(terms))


def perfect_power(p: Polynomial) -> int:
    """无平方分解中各（含主变量的）因子重数的最大公约数"""
    field = p.ring.field
    if field.characteristic:
        # 正特征下只判断原始形式是否恰为无平方部分的幂
        radical = square_free_part(p)
        ratio, rest = divmod(p.total_degree(), radical.total_degree())
        return ratio if not rest and primitive_form(radical ** ratio) == primitive_form(p) else 1
    if field.is_function_field:
        rep = flatten_parameters(p)
        offset = len(field.parameters)
    else:
        rep = p.rep
        offset = 0
    _, factors = rep.sqf_list()
    multiplicities = [k for factor, k in factors
                      if any(m[offset:] != (0,) * (len(m) - offset) for m in factor.itermonoms())]
    return reduce(gcd, multiplicities, 0) or 1


def image_via_resultant(f: Morphism, g: Polynomial) -> ImageResult:
    """用结式计算超曲面 V(g) 在 f 下的像

    Args:
        f: 射影态射
        g: 齐次形式，与 f 位于同一环

    Returns:
        像的定义形式及计算路径信息
    """
    ring = f.ring
    if g.ring != ring:
        raise RingMismatchError(f"形式与态射不在同一环中: {g.ring} 与 {ring}")
    big, names = graph_ring(ring, f.d)
    x = [big.embed(c) for c in f.coords]
    y = [big.gen(name) for name in names]
    lifted = big.embed(g)

    for i in range(ring.ngens):
        forms = [lifted] + [y[j] * x[i] - y[i] * x[j] for j in range(ring.ngens) if j != i]
        value = macaulay_resultant(ResultantSpec(forms, ring.variables))
        if value.is_zero:
            logger.warning(f"枢轴 {i} 的结式恒为零")
            continue
        stripped = _strip_variable(value, i)
        if stripped.is_constant():
            logger.debug(f"枢轴 {i} 去掉多余因子后为常数，换下一个枢轴")
            continue
        raw = ring.embed(stripped, dict(zip(names, ring.variables)))
        form = square_free_part(raw)
        logger.info(f"结式路径成功: 枢轴 {i}，原始次数 {raw.total_degree()}")
        return ImageResult(form=form, raw=raw, path="resultant", pivot=i,
                           raw_degree=raw.total_degree(), power=perfect_power(raw))

    logger.warning("所有枢轴的结式都退化，改用Gröbner消元")
    image = forward_image(f, Subvariety.hypersurface(g))
    form = image.hypersurface_form()
    return ImageResult(form=form, raw=form, path="groebner", pivot=None,
                       raw_degree=form.total_degree(), power=1)
