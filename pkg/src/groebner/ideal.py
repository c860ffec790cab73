#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Gröbner基模块 - 多项式理想

理想对象按单项式序缓存约化 Gröbner 基（一次写入，之后可并发读取），
并提供消元、理想成员判定以及由首项理想的 Hilbert 级数得到的维数与次数。
"""

import threading
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from loguru import logger

from src.algebra.polynomial import Polynomial, PolyRing
from src.groebner.buchberger import buchberger
from src.groebner.hilbert import hilbert_numerator, series_ring
from src.groebner.orders import EliminationOrder
from src.utils.exceptions import NotHomogeneousError, RingMismatchError, UnitIdealError


class Ideal:
    """多项式环中由有限个生成元生成的理想"""

    def __init__(self, ring: PolyRing, generators: Iterable[Polynomial]):
        generators = list(generators)
        for g in generators:
            if g.ring != ring:
                raise RingMismatchError(f"生成元不在环 {ring} 中: {g}")
        self.ring = ring
        self.generators: Tuple[Polynomial, ...] = tuple(g for g in generators if not g.is_zero)
        self._bases: Dict[object, List[Polynomial]] = {}
        self._lock = threading.Lock()

    def groebner(self, order="grevlex", budget: Optional[int] = None) -> List[Polynomial]:
        """给定单项式序下的约化 Gröbner 基

        Args:
            order: "lex"、"grlex"、"grevlex" 或块序对象
            budget: S 对预算，None 表示使用当前配置

        Returns:
            位于相应序的环中的首一约化基，按首单项式降序排列
        """
        cached = self._bases.get(order)
        if cached is not None:
            return cached
        target = self.ring.with_order(order)
        polys = [target.raw.from_dict(dict(g.rep.items())) for g in self.generators]
        logger.debug(f"计算Gröbner基: {len(polys)} 个生成元，环 {target}")
        basis = [Polynomial(target, rep) for rep in buchberger(polys, target.raw, budget)]
        with self._lock:
            return self._bases.setdefault(order, basis)

    def normal_form(self, p: Polynomial, order="grevlex") -> Polynomial:
        """p 对约化基的正规形式（位于理想所在的环中）"""
        if p.ring != self.ring:
            raise RingMismatchError(f"多项式不在环 {self.ring} 中")
        basis = self.groebner(order)
        target = self.ring.with_order(order)
        rep = target.raw.from_dict(dict(p.rep.items()))
        remainder = rep.rem([g.rep for g in basis]) if basis else rep
        return Polynomial(self.ring, self.ring.raw.from_dict(dict(remainder.items())))

    def contains(self, p: Polynomial) -> bool:
        return self.normal_form(p).is_zero

    def is_unit(self) -> bool:
        return any(g.is_constant() for g in self.groebner())

    def is_homogeneous(self) -> bool:
        return all(g.is_homogeneous() for g in self.generators)

    def __add__(self, other: "Ideal") -> "Ideal":
        if other.ring != self.ring:
            raise RingMismatchError(f"理想不在同一环中: {self.ring} 与 {other.ring}")
        return Ideal(self.ring, self.generators + other.generators)

    def _signature(self):
        return tuple(frozenset(g.rep.items()) for g in self.groebner())

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        return self.ring == other.ring and self._signature() == other._signature()

    def __hash__(self):
        return hash((self.ring, self._signature()))

    def __repr__(self):
        return f"Ideal({', '.join(str(g) for g in self.generators)})"


def reduced_groebner(ideal: Ideal, order="grevlex", budget: Optional[int] = None) -> List[Polynomial]:
    """理想在给定序下的约化 Gröbner 基"""
    return ideal.groebner(order, budget)


def eliminate(ideal: Ideal, drop_vars: Sequence[str], budget: Optional[int] = None) -> Ideal:
    """消元理想 I ∩ K[保留变量]

    Args:
        ideal: 理想
        drop_vars: 需要消去的变量名
        budget: S 对预算

    Returns:
        位于保留变量构成的环中的理想
    """
    ring = ideal.ring
    drop = sorted({ring.index(v) for v in drop_vars})
    if not drop:
        return Ideal(ring, ideal.generators)
    keep = [i for i in range(ring.ngens) if i not in drop]
    if not keep:
        raise RingMismatchError("不能消去环中的全部变量")

    order = EliminationOrder(drop, keep, ring.weights)
    basis = ideal.groebner(order, budget)
    target = PolyRing([ring.variables[i] for i in keep], ring.field, "grevlex",
                      [ring.weights[i] for i in keep])
    survivors = [g for g in basis if all(not m[i] for m in g.monomials() for i in drop)]
    logger.debug(f"消元 {list(drop_vars)}: 基大小 {len(basis)}，保留 {len(survivors)} 个生成元")
    return Ideal(target, [target.embed(g) for g in survivors])


def ideal_membership(p: Polynomial, ideal: Ideal) -> bool:
    """p 是否属于理想（对约化基的正规形式为零）"""
    return ideal.contains(p)


def dimension_degree(ideal: Ideal) -> Tuple[int, int]:
    """齐次理想的射影维数与次数

    由分次反字典序 Gröbner 基的首项理想计算 Hilbert 级数 N(t)/(1-t)^n，
    约去 (1-t) 的因子 k 次后，射影维数为 n-k-1，次数为约去后分子在 t=1 处的值。

    Raises:
        NotHomogeneousError: 存在非齐次生成元
        UnitIdealError: 单位理想或零点集为空
    """
    if not ideal.is_homogeneous():
        error_msg = "维数与次数只对齐次理想定义"
        logger.error(error_msg)
        raise NotHomogeneousError(error_msg)
    basis = ideal.groebner("grevlex")
    if any(g.is_constant() for g in basis):
        raise UnitIdealError("单位理想没有维数与次数")

    n = ideal.ring.ngens
    numerator = hilbert_numerator([g.leading_monomial() for g in basis], n)
    t = series_ring().gens[0]
    one_minus_t = series_ring().one - t
    k = 0
    while numerator and numerator(1) == 0:
        numerator = numerator.exquo(one_minus_t)
        k += 1
    dimension = n - k - 1
    degree = int(numerator(1))
    if dimension < 0 or degree <= 0:
        raise UnitIdealError("理想在射影空间中的零点集为空")
    return dimension, degree
