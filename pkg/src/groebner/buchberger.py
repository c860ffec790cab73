#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Gröbner基模块 - Buchberger算法

改进的 Buchberger 算法：正规选择策略挑选 S 对，配合 Gebauer-Möller 更新
（首项互素判据与链判据）。输入先做一次相互约化，输出为按首单项式降序排列的
首一约化 Gröbner 基。处理的 S 对数量受预算限制，超出时抛出资源错误。
"""

from typing import Dict, List, Optional, Set, Tuple

from loguru import logger

from src.utils.config import get_active_config
from src.utils.exceptions import BudgetExceededError


def spoly(p1, p2, ring):
    """首一多项式 p1, p2 的 S 多项式"""
    lcm12 = ring.monomial_lcm(p1.LM, p2.LM)
    s1 = p1.mul_monom(ring.monomial_div(lcm12, p1.LM))
    s2 = p2.mul_monom(ring.monomial_div(lcm12, p2.LM))
    return s1 - s2


def _initial_reduction(polys: List) -> List:
    """反复用前面的多项式约化后面的多项式，直到列表稳定"""
    f1 = polys[:]
    while True:
        f = f1[:]
        f1 = []
        for i, p in enumerate(f):
            r = p.rem(f[:i])
            if r:
                f1.append(r.monic())
        if f == f1:
            return f


def buchberger(polys: List, ring, budget: Optional[int] = None) -> List:
    """计算 sympy 多项式环中一组多项式的约化 Gröbner 基

    Args:
        polys: 同一 sympy 多项式环中的多项式（系数域为域）
        ring: sympy 多项式环，其单项式序决定结果
        budget: 允许处理的 S 对数量上限，None 表示使用当前配置

    Returns:
        首一、相互约化、按首单项式降序排列的 Gröbner 基

    Raises:
        BudgetExceededError: 处理的 S 对数量超出预算
    """
    if budget is None:
        budget = get_active_config().groebner_pair_budget
    order = ring.order
    monomial_mul = ring.monomial_mul
    monomial_div = ring.monomial_div
    monomial_lcm = ring.monomial_lcm

    f = [p for p in polys if p]
    if not f:
        return []
    f = _initial_reduction(f)

    index: Dict = {}
    for i, h in enumerate(f):
        index[h] = i

    def select(pairs: Set[Tuple[int, int]]) -> Tuple[int, int]:
        # 正规选择：首单项式最小公倍最小的对
        return min(pairs, key=lambda pair: (order(monomial_lcm(f[pair[0]].LM, f[pair[1]].LM)), pair))

    def normal(g, basis_indices):
        h = g.rem([f[j] for j in basis_indices])
        if not h:
            return None
        h = h.monic()
        if h not in index:
            index[h] = len(f)
            f.append(h)
        return index[h]

    def update(basis: Set[int], pairs: Set[Tuple[int, int]], ih: int):
        h = f[ih]
        mh = h.LM

        candidates = sorted(basis)
        new_pairs = set()
        while candidates:
            ig = candidates.pop()
            mg = f[ig].LM
            lcm_hg = monomial_lcm(mh, mg)

            def lcm_divides(ip):
                return monomial_div(lcm_hg, monomial_lcm(mh, f[ip].LM))

            if monomial_mul(mh, mg) == lcm_hg or (
                    not any(lcm_divides(ipx) for ipx in candidates)
                    and not any(lcm_divides(pr[1]) for pr in new_pairs)):
                new_pairs.add((ih, ig))

        # 首项互素的对必然约化为零
        kept_new = {(ih, ig) for ih, ig in new_pairs
                    if monomial_mul(mh, f[ig].LM) != monomial_lcm(mh, f[ig].LM)}

        kept_old = set()
        for ig1, ig2 in pairs:
            mg1, mg2 = f[ig1].LM, f[ig2].LM
            lcm12 = monomial_lcm(mg1, mg2)
            if (not monomial_div(lcm12, mh)
                    or monomial_lcm(mg1, mh) == lcm12
                    or monomial_lcm(mg2, mh) == lcm12):
                kept_old.add((ig1, ig2))

        new_basis = {ig for ig in basis if not monomial_div(f[ig].LM, mh)}
        new_basis.add(ih)
        return new_basis, kept_old | kept_new

    pending = set(range(len(f)))
    basis: Set[int] = set()
    pairs: Set[Tuple[int, int]] = set()
    while pending:
        ih = min(pending, key=lambda i: order(f[i].LM))
        pending.remove(ih)
        basis, pairs = update(basis, pairs, ih)

    processed = 0
    zero_reductions = 0
    while pairs:
        if processed >= budget:
            error_msg = f"Gröbner基计算超出S对预算: 已处理 {processed} 对，剩余 {len(pairs)} 对"
            logger.error(error_msg)
            raise BudgetExceededError(error_msg)
        ig1, ig2 = select(pairs)
        pairs.remove((ig1, ig2))
        processed += 1

        h = spoly(f[ig1], f[ig2], ring)
        ordered = sorted(basis, key=lambda g: order(f[g].LM))
        ih = normal(h, ordered)
        if ih is not None:
            basis, pairs = update(basis, pairs, ih)
        else:
            zero_reductions += 1

    reduced = set()
    for ig in basis:
        ih = normal(f[ig], sorted(basis - {ig}))
        if ih is not None:
            reduced.add(ih)

    result = sorted((f[i] for i in reduced), key=lambda p: order(p.LM), reverse=True)
    logger.debug(f"Buchberger完成: 处理 {processed} 个S对，其中 {zero_reductions} 个约化为零，基大小 {len(result)}")
    return result
