#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Chow形式模块 - 分量上的限制与自映射

在次数保持轨迹的线性分量 Y 上，一般形式的像仍是 D 次超曲面，其系数给出
Y 所在系数空间上的映射 ψ。自映射过程反复取 (ψ(Y) 的闭包) ∩ Y，直到
ψ 把当前子簇映到自身（用理想包含检验），步数不超过 dim Y。
"""

from typing import List, Sequence, Union

from loguru import logger
from pydantic import BaseModel, ConfigDict, Field

from src.algebra.fields import ScalarField
from src.algebra.polynomial import PolyRing, compose
from src.chow.induced_map import InducedMap, image_coefficients, tau
from src.dynamics.images import forward_image
from src.dynamics.morphism import Morphism
from src.dynamics.subvariety import Subvariety
from src.utils.exceptions import (
    DegenerateImageError,
    PreconditionError,
    RingMismatchError,
    SelfMapError,
    UnitIdealError,
    UnsupportedCaseError,
)


def _parameterize(Y: Subvariety):
    """线性子簇的参数化：返回自由变量名与每个系数坐标关于自由变量的线性表达式"""
    basis = Y.canonical_basis()
    if any(g.total_degree() != 1 for g in basis):
        error_msg = f"只能限制到线性分量上: {Y}"
        logger.error(error_msg)
        raise UnsupportedCaseError(error_msg)
    ring = Y.ring
    pivots = {}
    for g in basis:
        lead = g.leading_monomial().index(1)
        pivots[lead] = g
    free = [v for i, v in enumerate(ring.variables) if i not in pivots]
    if not free:
        raise UnitIdealError(f"线性子簇为空: {Y}")
    return pivots, free


def restrict_to_component(f: Morphism, D: int, Y: Subvariety, budget=None) -> Morphism:
    """f 诱导的系数映射在线性分量 Y 上的限制 ψ

    Args:
        f: Q 或 F_p 上的态射
        D: 超曲面次数
        Y: D 次形式系数空间中的线性子簇（环的变量个数为 τ(D)）
        budget: 正像计算的 S 对预算

    Returns:
        Y 的坐标环上的方阵映射（可能有零坐标），坐标为像形式的系数

    Raises:
        DegenerateImageError: Y 上一般成员的像次数不是 D
        UnsupportedCaseError: Y 不是线性子簇
    """
    ring = Y.ring
    if ring.ngens != tau(f.N, D):
        raise RingMismatchError(f"系数空间的维数 {ring.ngens} 与 τ({D}) = {tau(f.N, D)} 不一致")
    if ring.field != f.field:
        raise RingMismatchError(f"系数空间与态射的系数域不一致: {ring.field.label()} 与 {f.field.label()}")
    pivots, free = _parameterize(Y)

    field = ScalarField.function_field(f.field, free)
    lifted_ring = f.ring.with_field(field)
    values = []
    for i, name in enumerate(ring.variables):
        if i not in pivots:
            values.append(field.parameter(name))
            continue
        g = pivots[i]
        rest = field.zero
        for monom, coeff in g.rep.items():
            j = monom.index(1)
            if j != i:
                rest += field.convert(coeff) * field.parameter(ring.variables[j])
        values.append(-rest / field.convert(g.coefficient(g.leading_monomial())))

    monomials = lifted_ring.monomials_of_degree(D)
    generic = lifted_ring.from_terms(dict(zip(monomials, values)))
    lifted = Morphism([lifted_ring.embed(c) for c in f.coords], check=False)
    image = forward_image(lifted, Subvariety.hypersurface(generic), budget)
    if not image.is_hypersurface() or image.hypersurface_form().total_degree() != D:
        error_msg = f"分量 {Y} 上一般成员的像不是 {D} 次超曲面: {image}"
        logger.error(error_msg)
        raise DegenerateImageError(error_msg)

    free_ring = PolyRing(free, f.field, "grevlex")
    coords = [ring.embed(c) for c in image_coefficients(image.hypersurface_form(), monomials, free_ring)]
    psi = Morphism(coords, check=False)
    logger.info(f"限制到分量 {Y}: ψ = {psi}")
    return psi


class SelfMapRestriction(BaseModel):
    """自映射过程的结果"""
    model_config = ConfigDict(arbitrary_types_allowed=True)

    map: Morphism = Field(..., description="限制后的系数映射 ψ")
    variety: Subvariety = Field(..., description="ψ 映到自身的子簇")
    steps: int = Field(..., description="收缩步数 j")
    certificate: bool = Field(..., description="理想包含检验是否通过")
    history: List[str] = Field(default_factory=list, description="各步子簇的规范文本")


def is_self_map(psi: Morphism, Y: Subvariety) -> bool:
    """I(Y) 的每个生成元与 ψ 复合后仍在 I(Y) 中"""
    return all(Y.ideal.contains(compose(h, psi.coords)) for h in Y.canonical_basis())


def self_map_restriction(phi: Union[InducedMap, Morphism], Y: Subvariety, x_coeffs: Sequence,
                         budget=None) -> SelfMapRestriction:
    """把系数映射限制为 Y 的某个子簇上的自映射

    Args:
        phi: 诱导映射（非方阵时用其来源态射在 Y 上重新计算 ψ）或系数空间上的方阵映射
        Y: 包含 x_coeffs 的子簇，不可约性由调用者保证
        x_coeffs: 所研究子簇的系数向量
        budget: 正像计算的 S 对预算

    Returns:
        自映射、子簇、步数 j 与证书

    Raises:
        PreconditionError: x_coeffs 不在 Y 上
        SelfMapError: x_coeffs 离开了计算出的子簇，或收缩不再降维
    """
    if isinstance(phi, InducedMap):
        if phi.is_square:
            psi = Morphism([Y.ring.embed(c) for c in phi.coords], check=False)
        elif phi.origin is not None:
            psi = restrict_to_component(phi.origin, phi.D, Y, budget)
        else:
            raise UnsupportedCaseError("非方阵的诱导映射需要来源态射才能限制到分量上")
    else:
        psi = phi
    if psi.ring != Y.ring:
        raise RingMismatchError(f"映射与子簇不在同一系数空间: {psi.ring} 与 {Y.ring}")
    if not Y.contains_point(x_coeffs):
        error_msg = f"系数向量 {tuple(x_coeffs)} 不在 {Y} 上"
        logger.error(error_msg)
        raise PreconditionError(error_msg)

    current = Y
    history = [current.canonical_text()]
    for j in range(Y.dimension + 1):
        if is_self_map(psi, current):
            logger.info(f"自映射成立: {current}，收缩 {j} 步")
            return SelfMapRestriction(map=psi, variety=current, steps=j, certificate=True, history=history)

        image = forward_image(psi, current, budget)
        shrunk = Subvariety(Y.ring, image.generators + Y.generators)
        if not shrunk.contains_point(x_coeffs):
            error_msg = f"系数向量离开了 ψ({current}) ∩ Y"
            logger.error(error_msg)
            raise SelfMapError(error_msg)
        try:
            dimension = shrunk.dimension
        except UnitIdealError as e:
            raise SelfMapError(f"ψ({current}) ∩ Y 为空") from e
        if dimension >= current.dimension:
            error_msg = f"ψ({current}) ∩ Y 的维数没有下降，当前子簇可能不是不可约的"
            logger.error(error_msg)
            raise SelfMapError(error_msg)
        logger.debug(f"第 {j + 1} 步收缩: {current} -> {shrunk}")
        current = shrunk
        history.append(current.canonical_text())

    error_msg = f"{Y.dimension} 步内没有得到自映射: {current}"
    logger.error(error_msg)
    raise SelfMapError(error_msg)
