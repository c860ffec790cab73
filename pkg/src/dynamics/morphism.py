#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
动力学模块 - 射影态射

P^N 上由 N+1 个同次齐次多项式给出的态射。构造时检查 Macaulay 结式非零，
即坐标多项式在代数闭包上没有公共零点。
"""

from typing import List, Sequence, Tuple

import mpmath
from loguru import logger

from src.algebra.polynomial import Polynomial, compose, integer_coefficients
from src.resultants.macaulay import ResultantSpec, macaulay_resultant
from src.utils.config import get_active_config
from src.utils.exceptions import (
    NotAMorphismError,
    NotHomogeneousError,
    PreconditionError,
    RingMismatchError,
    UnsupportedCaseError,
)


class Morphism:
    """P^N 上 d 次态射 f = (f_0 : ... : f_N)

    Attributes:
        coords: 坐标多项式
        ring: 坐标环
        N: 射影空间维数
        d: 次数
    """

    def __init__(self, coords: Sequence[Polynomial], check: bool = True):
        # check=False 时允许零坐标，用于限制在子簇上的系数空间映射
        coords = list(coords)
        if not coords:
            raise RingMismatchError("态射至少需要一个坐标")
        ring = coords[0].ring
        if len(coords) != ring.ngens:
            raise RingMismatchError(f"坐标个数 {len(coords)} 与变量个数 {ring.ngens} 不一致")
        degrees = set()
        for c in coords:
            if c.ring != ring:
                raise RingMismatchError("态射的坐标必须位于同一环中")
            if c.is_zero:
                if check:
                    raise NotAMorphismError("态射的坐标不能为零多项式")
                continue
            if not c.is_homogeneous():
                error_msg = f"态射的坐标必须是齐次多项式: {c}"
                logger.error(error_msg)
                raise NotHomogeneousError(error_msg)
            degrees.add(c.total_degree())
        if not degrees:
            raise NotAMorphismError("态射的坐标不能全为零")
        if len(degrees) != 1:
            raise NotHomogeneousError(f"态射的坐标次数不一致: {sorted(degrees)}")
        self.coords: Tuple[Polynomial, ...] = tuple(coords)
        self.ring = ring
        self.d = degrees.pop()
        if self.d < 1:
            raise PreconditionError("态射的次数必须至少为1")
        self._resultant = None
        if check and not self.resultant:
            error_msg = f"坐标多项式有公共零点（结式为零），不是态射: {self}"
            logger.error(error_msg)
            raise NotAMorphismError(error_msg)

    @property
    def N(self) -> int:
        return self.ring.ngens - 1

    @property
    def field(self):
        return self.ring.field

    @property
    def resultant(self):
        """坐标多项式的 Macaulay 结式"""
        if self._resultant is None:
            self._resultant = macaulay_resultant(ResultantSpec(self.coords))
        return self._resultant

    @property
    def height(self) -> mpmath.mpf:
        """系数的联合高度 h(f)：全部坐标的系数一起清分母、除去容量后取 ln max"""
        if not self.field.is_rationals:
            raise UnsupportedCaseError(f"态射高度只对有理系数定义，当前域: {self.field.label()}")
        ints = integer_coefficients([c for coord in self.coords for c in coord.rep.coeffs()])
        with mpmath.workprec(get_active_config().real_precision_bits):
            return mpmath.log(mpmath.mpf(max(abs(i) for i in ints)))

    def normalized_coords(self) -> List[Polynomial]:
        """有理系数态射的整系数代表：联合清分母并除去整数容量"""
        if not self.field.is_rationals:
            raise UnsupportedCaseError("只有有理系数态射才能取整系数代表")
        items = [(i, m, c) for i, coord in enumerate(self.coords) for m, c in coord.rep.items()]
        ints = integer_coefficients([c for _, _, c in items])
        terms: List[dict] = [{} for _ in self.coords]
        for (i, m, _), value in zip(items, ints):
            terms[i][m] = value
        return [self.ring.from_terms(t) for t in terms]

    def compose(self, other: "Morphism") -> "Morphism":
        """self ∘ other"""
        if other.ring != self.ring:
            raise RingMismatchError("复合的态射不在同一环中")
        return Morphism([compose(c, other.coords) for c in self.coords], check=False)

    def iterate(self, n: int) -> "Morphism":
        """n 次迭代 f^n（n ≥ 1）"""
        if n < 1:
            raise PreconditionError(f"迭代次数必须至少为1: {n}")
        result = self
        for _ in range(n - 1):
            result = self.compose(result)
        return result

    def apply(self, point: Sequence):
        """点的像（域元素组成的元组）"""
        image = tuple(c.evaluate(point) for c in self.coords)
        if not any(image):
            raise NotAMorphismError(f"点 {tuple(point)} 是态射的基点")
        return image

    def __eq__(self, other):
        if not isinstance(other, Morphism):
            return NotImplemented
        return self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __str__(self):
        return "(" + ", ".join(str(c) for c in self.coords) + ")"

    def __repr__(self):
        return f"Morphism{self} over {self.field.label()}"
