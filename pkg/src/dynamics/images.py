#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
动力学模块 - 正像与原像

正像通过加权消元计算：在 K[x, y] 中取理想 (g_i(x), y_j - f_j(x))，x 的权为 1，
y 的权为 d，消去 x 得到像的理想。原像直接复合 g_i∘f。
超曲面的像与（可选地）原像取无平方部分，使次数与几何次数一致。
"""

from typing import Dict, List, Sequence

from loguru import logger

from src.algebra.polynomial import PolyRing, compose, square_free_part
from src.dynamics.morphism import Morphism
from src.dynamics.subvariety import Subvariety
from src.groebner.ideal import Ideal, eliminate
from src.utils.exceptions import BudgetExceededError, RingMismatchError


def fresh_names(taken: Sequence[str], count: int, prefix: str = "y") -> List[str]:
    """生成与已有名字不冲突的新变量名"""
    taken = set(taken)
    names = []
    i = 0
    while len(names) < count:
        candidate = f"{prefix}{i}"
        while candidate in taken:
            candidate = f"_{candidate}"
        names.append(candidate)
        taken.add(candidate)
        i += 1
    return names


def graph_ring(ring: PolyRing, d: int, prefix: str = "y"):
    """K[x, y] 及新变量名：x 的权为 1，y 的权为 d"""
    names = fresh_names(list(ring.variables) + list(ring.field.parameters), ring.ngens, prefix)
    big = PolyRing(list(ring.variables) + names, ring.field, "grevlex",
                   [1] * ring.ngens + [d] * ring.ngens)
    return big, names


def _check_compatible(f: Morphism, X: Subvariety):
    if X.ring.variables != f.ring.variables or X.ring.field != f.ring.field:
        raise RingMismatchError(f"子簇与态射不在同一射影空间或系数域: {X.ring} 与 {f.ring}")


def forward_image(f: Morphism, X: Subvariety, budget=None) -> Subvariety:
    """子簇的正像 f(X)

    Args:
        f: 射影态射
        X: 子簇（与 f 位于同一环）
        budget: S 对预算

    Returns:
        像子簇；超曲面的像取无平方部分

    Raises:
        BudgetExceededError: Gröbner 基计算超出预算
    """
    _check_compatible(f, X)
    ring = f.ring
    big, names = graph_ring(ring, f.d)
    generators = [big.embed(g) for g in X.generators]
    generators += [big.gen(y) - big.embed(c) for y, c in zip(names, f.coords)]

    try:
        eliminated = eliminate(Ideal(big, generators), ring.variables, budget)
    except BudgetExceededError as e:
        error_msg = f"计算正像时超出预算: {str(e)}"
        logger.error(error_msg)
        raise BudgetExceededError(error_msg, partial=X) from e

    back: Dict[str, str] = dict(zip(names, ring.variables))
    image_gens = [ring.embed(g, back) for g in eliminated.generators]
    image = Subvariety(ring, image_gens)
    if image.is_hypersurface():
        image = Subvariety(ring, [square_free_part(image.hypersurface_form())])
    logger.debug(f"正像: {X} -> {image}")
    return image


def preimage(f: Morphism, X: Subvariety, reduced: bool = False) -> Subvariety:
    """子簇的原像 f^{-1}(X) = V(g_1∘f, ..., g_k∘f)

    Args:
        f: 射影态射
        X: 子簇
        reduced: 为 True 时超曲面的原像取无平方部分
    """
    _check_compatible(f, X)
    generators = [compose(g, f.coords) for g in X.generators]
    if reduced and len(generators) == 1:
        generators = [square_free_part(generators[0])]
    return Subvariety(f.ring, generators)
