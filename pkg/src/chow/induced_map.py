#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Chow形式模块 - 系数空间上的诱导映射

余维数 t = 1：取系数为参数 a_i 的 D 次一般形式，在有理函数域上计算其正像，
像形式（本原化后）的系数就是诱导映射的坐标，系数按分次反字典序降序的单项式排列。
t = N：点的 Chow 坐标就是点本身，诱导映射即 f。
"""

from math import comb
from typing import List, Optional, Sequence, Tuple

from loguru import logger
from pydantic import BaseModel, ConfigDict, Field

from src.algebra.fields import ScalarField
from src.algebra.polynomial import Polynomial, PolyRing, parameter_numerators
from src.dynamics.images import forward_image, fresh_names
from src.dynamics.morphism import Morphism
from src.dynamics.subvariety import Subvariety
from src.utils.exceptions import DegenerateImageError, PreconditionError, UnsupportedCaseError


def tau(N: int, v: int) -> int:
    """P^N 中 v 次形式的系数个数 C(N+v, N)"""
    return comb(N + v, N)


class InducedMap(BaseModel):
    """系数空间之间的诱导映射 P^{τ(D)-1} → P^{τ(D')-1}"""
    model_config = ConfigDict(arbitrary_types_allowed=True)

    N: int = Field(..., description="射影空间维数")
    t: int = Field(..., description="余维数")
    D: int = Field(..., description="源子簇次数")
    image_degree: int = Field(..., description="像的次数 D'")
    degree: int = Field(..., description="坐标多项式的次数")
    coefficient_ring: PolyRing = Field(..., description="源系数 a_i 的多项式环")
    coords: List[Polynomial] = Field(..., description="像的各系数，按单项式降序")
    source_monomials: List[tuple] = Field(default_factory=list, description="源系数对应的单项式")
    target_monomials: List[tuple] = Field(default_factory=list, description="像系数对应的单项式")
    origin: Optional[Morphism] = Field(default=None, exclude=True, description="诱导出该映射的态射")

    @property
    def source_dim(self) -> int:
        return self.coefficient_ring.ngens - 1

    @property
    def target_dim(self) -> int:
        return len(self.coords) - 1

    @property
    def is_square(self) -> bool:
        return self.source_dim == self.target_dim

    def as_morphism(self) -> Morphism:
        """源与像的系数空间相同时，把诱导映射看作系数空间上的映射"""
        if not self.is_square:
            raise UnsupportedCaseError(
                f"诱导映射 P^{self.source_dim} → P^{self.target_dim} 不是自映射")
        return Morphism(self.coords, check=False)

    def specialize(self, values: Sequence) -> list:
        """在系数取值 values 处的像系数向量"""
        return [c.evaluate(values) for c in self.coords]


def generic_form(ring: PolyRing, D: int, names: Sequence[str]) -> Polynomial:
    """系数为参数 names 的 D 次一般形式，ring 的系数域必须含这些参数"""
    monomials = ring.monomials_of_degree(D)
    if len(monomials) != len(names):
        raise PreconditionError(f"参数个数 {len(names)} 与 {D} 次单项式个数 {len(monomials)} 不一致")
    return ring.from_terms({m: ring.field.parameter(a) for m, a in zip(monomials, names)})


def image_coefficients(form: Polynomial, monomials: Sequence[tuple], target: PolyRing) -> List[Polynomial]:
    """参数系数形式在给定单项式上的系数（清分母后作为 target 中的多项式）"""
    numerators = parameter_numerators(form)
    coords = []
    for m in monomials:
        numer = numerators.get(tuple(m))
        coords.append(target.zero if numer is None else
                      Polynomial(target, target.raw.from_dict(dict(numer.items()))))
    return coords


def _common_degree(coords: Sequence[Polynomial]) -> int:
    degrees = {c.total_degree() for c in coords if not c.is_zero}
    if len(degrees) != 1 or not all(c.is_homogeneous() for c in coords if not c.is_zero):
        error_msg = f"诱导映射的坐标不是同次齐次多项式: 次数 {sorted(degrees)}"
        logger.error(error_msg)
        raise DegenerateImageError(error_msg)
    return degrees.pop()


def generic_image(f: Morphism, D: int, budget=None) -> Tuple[Polynomial, List[str]]:
    """系数为参数 a_i 的 D 次一般超曲面的像形式（在 f 的系数域添加参数后的环中）及参数名"""
    ring = f.ring
    names = fresh_names(list(ring.variables), tau(f.N, D), prefix="a")
    lifted_ring = ring.with_field(ScalarField.function_field(f.field, names))
    lifted = Morphism([lifted_ring.embed(c) for c in f.coords], check=False)
    generic = generic_form(lifted_ring, D, names)

    image = forward_image(lifted, Subvariety.hypersurface(generic), budget)
    if not image.is_hypersurface():
        error_msg = f"一般 {D} 次超曲面的像不是超曲面: {image}"
        logger.error(error_msg)
        raise DegenerateImageError(error_msg)
    return image.hypersurface_form(), names


def _hypersurface_map(f: Morphism, D: int, budget=None) -> InducedMap:
    form, names = generic_image(f, D, budget)
    lifted_ring = form.ring
    count = len(names)
    D_image = form.total_degree()

    coefficient_ring = PolyRing(names, f.field, "grevlex")
    targets = lifted_ring.monomials_of_degree(D_image)
    coords = image_coefficients(form, targets, coefficient_ring)
    degree = _common_degree(coords)
    expected = f.d ** f.N
    if degree != expected:
        logger.warning(f"诱导映射的次数 {degree} 与 d^N = {expected} 不一致")
    logger.info(f"诱导映射: P^{count - 1} → P^{len(coords) - 1}，次数 {degree}，像次数 {D_image}")
    return InducedMap(N=f.N, t=1, D=D, image_degree=D_image, degree=degree,
                      coefficient_ring=coefficient_ring, coords=coords,
                      source_monomials=lifted_ring.monomials_of_degree(D),
                      target_monomials=targets, origin=f)


def _point_map(f: Morphism) -> InducedMap:
    ring = f.ring
    names = fresh_names(list(ring.variables), ring.ngens, prefix="a")
    coefficient_ring = PolyRing(names, f.field, "grevlex")
    renaming = dict(zip(ring.variables, names))
    coords = [coefficient_ring.embed(c, renaming) for c in f.coords]
    units = [tuple(1 if j == i else 0 for j in range(ring.ngens)) for i in range(ring.ngens)]
    return InducedMap(N=f.N, t=f.N, D=1, image_degree=1, degree=f.d,
                      coefficient_ring=coefficient_ring, coords=coords,
                      source_monomials=units, target_monomials=units, origin=f)


def induced_chow_map(f: Morphism, D: int, t: int = 1, budget=None) -> InducedMap:
    """f 在余维数 t、次数 D 的子簇的 Chow 坐标上诱导的映射

    Args:
        f: Q 或 F_p 上的态射
        D: 源子簇次数
        t: 余维数，支持 1（超曲面）与 N（点，此时 D = 1）
        budget: 正像计算的 S 对预算

    Returns:
        诱导映射，坐标在源系数中是 d^{N-t+1} 次齐次多项式

    Raises:
        DegenerateImageError: 一般成员的像不是超曲面
        UnsupportedCaseError: 其它余维数或参数系数的态射
    """
    if D < 1:
        raise PreconditionError(f"子簇次数必须至少为1: {D}")
    if f.field.is_function_field:
        raise UnsupportedCaseError("诱导映射要求态射的系数在 Q 或 F_p 中")
    if t == 1:
        return _hypersurface_map(f, D, budget)
    if t == f.N:
        if D != 1:
            raise UnsupportedCaseError(f"余维数 N 的情形只支持有理点（D = 1），收到 D = {D}")
        return _point_map(f)
    raise UnsupportedCaseError(f"诱导映射只支持余维数 1 与 N，收到 t = {t}")
