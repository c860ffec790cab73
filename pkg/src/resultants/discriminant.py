#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
结式模块 - 判别轨迹

带参数系数的像形式在参数空间中的退化轨迹 Z_k：对各主变量取 d^k - 1 阶偏导数，
再取这些偏导数的 Macaulay 结式。分量提取只做容量、单项式因子与线性因子。
"""

from typing import List, Tuple

from loguru import logger
from pydantic import BaseModel, ConfigDict, Field

from src.algebra.polynomial import Polynomial, PolyRing, format_scalar, partial_derivative, primitive_form
from src.dynamics.subvariety import Subvariety
from src.resultants.macaulay import ResultantSpec, macaulay_resultant
from src.utils.exceptions import PreconditionError, UnsupportedCaseError, ZeroPartialError


def parameter_ring(field, order: str = "grevlex") -> PolyRing:
    """有理函数域的参数构成的多项式环（系数在基域）"""
    if not field.is_function_field:
        raise UnsupportedCaseError(f"系数域没有参数: {field.label()}")
    return PolyRing(field.parameters, field.base, order)


def scalar_to_parameter_poly(value, field) -> Polynomial:
    """把分母为常数的参数有理函数转换为参数多项式；分母非常数时只保留分子"""
    target = parameter_ring(field)
    numer, denom = value.numer, value.denom
    if denom.is_ground:
        scale = field.base.domain.quo(field.base.domain.one, denom.LC)
        return Polynomial(target, target.raw.from_dict(dict(numer.mul_ground(scale).items())))
    logger.warning(f"判别式的分母含参数，只保留分子: 分母 {denom}")
    return Polynomial(target, target.raw.from_dict(dict(numer.items())))


def discriminant_locus(image_form: Polynomial, k: int, d: int) -> Polynomial:
    """像形式的判别轨迹 Z_k

    Args:
        image_form: 主变量中齐次、系数含参数的形式
        k: 判别轨迹的序号（k ≥ 1）
        d: 态射的次数，求导阶数为 d^k - 1

    Returns:
        参数多项式（整体符号不固定）

    Raises:
        ZeroPartialError: 某个偏导数为零
    """
    if k < 1 or d < 1:
        raise PreconditionError(f"判别轨迹要求 k ≥ 1 且 d ≥ 1: k={k}, d={d}")
    field = image_form.ring.field
    if not field.is_function_field:
        raise UnsupportedCaseError("判别轨迹要求像形式的系数含参数")
    order = d ** k - 1
    if order < 1:
        raise ZeroPartialError(f"求导阶数 {order} 必须至少为1")

    partials = []
    for var in image_form.ring.variables:
        partial = partial_derivative(image_form, var, order)
        if partial.is_zero:
            error_msg = f"关于 {var} 的 {order} 阶偏导数为零，求导阶数过高"
            logger.error(error_msg)
            raise ZeroPartialError(error_msg)
        partials.append(partial)

    logger.debug(f"判别轨迹 Z_{k}: {len(partials)} 个 {order} 阶偏导数")
    value = macaulay_resultant(ResultantSpec(partials))
    return scalar_to_parameter_poly(value, field)


class DiscriminantComponents(BaseModel):
    """判别轨迹的分量"""
    model_config = ConfigDict(arbitrary_types_allowed=True)

    content: str = Field(..., description="去掉的标量容量")
    monomial_factors: List[Tuple[str, int]] = Field(default_factory=list, description="单项式因子 (参数, 重数)")
    linear_factors: List[Tuple[Polynomial, int]] = Field(default_factory=list, description="线性因子及重数")
    remainder: Polynomial = Field(..., description="未指定的非线性剩余部分")
    components: List[Subvariety] = Field(default_factory=list, description="线性分量（系数空间中的子簇）")


def discriminant_components(Z: Polynomial) -> DiscriminantComponents:
    """提取判别轨迹的线性分量

    依次去掉标量容量、拆出单项式因子，再从库的因式分解中取齐次线性因子；
    其余因子并入剩余部分，由调用者指定所需的分量。
    """
    if Z.is_zero:
        raise PreconditionError("判别轨迹恒为零，没有分量")
    ring = Z.ring
    primitive = primitive_form(Z)
    content = ring.field.domain.quo(Z.leading_coefficient(), primitive.leading_coefficient())

    lowest = [min(m[i] for m in primitive.monomials()) for i in range(ring.ngens)]
    monomial_factors = [(ring.variables[i], e) for i, e in enumerate(lowest) if e]
    terms = {tuple(a - b for a, b in zip(m, lowest)): c for m, c in primitive.rep.items()}
    rest = Polynomial(ring, ring.raw.from_dict(terms))

    linear: List[Tuple[Polynomial, int]] = []
    remainder = ring.one
    if ring.field.is_rationals and not rest.is_constant():
        _, factors = rest.rep.factor_list()
        for factor, multiplicity in factors:
            poly = primitive_form(Polynomial(ring, factor))
            if poly.total_degree() == 1 and poly.is_homogeneous():
                linear.append((poly, multiplicity))
            else:
                remainder = remainder * poly ** multiplicity
    else:
        remainder = rest if rest.is_constant() else primitive_form(rest)
    if remainder.is_constant():
        remainder = ring.one

    components = [Subvariety(ring, [ring.gen(name)]) for name, _ in monomial_factors]
    components += [Subvariety(ring, [poly]) for poly, _ in linear]
    logger.info(f"判别轨迹分量: 单项式因子 {monomial_factors}，线性因子 {len(linear)} 个")
    return DiscriminantComponents(
        content=format_scalar(content, ring.field),
        monomial_factors=monomial_factors,
        linear_factors=linear,
        remainder=remainder,
        components=components,
    )
