#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Gröbner基模块 - Hilbert级数

单项式理想的 Hilbert 级数分子，通过对变量做枢轴递归计算：
N(I) = N(I + (x)) + t·N(I : x)。
"""

from typing import List, Sequence, Tuple

from sympy import Symbol
from sympy.polys import rings as sympy_rings
from sympy.polys.domains import ZZ
from sympy.polys.orderings import lex

Monomial = Tuple[int, ...]

_SERIES_RING = sympy_rings.PolyRing([Symbol("t")], ZZ, lex)


def series_ring():
    """Hilbert 级数分子所在的整系数单变量环 Z[t]"""
    return _SERIES_RING


def _divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def minimalize(monomials: Sequence[Monomial]) -> List[Monomial]:
    """单项式理想的极小生成元"""
    minimal: List[Monomial] = []
    for m in sorted(set(monomials), key=sum):
        if not any(_divides(g, m) for g in minimal):
            minimal.append(m)
    return minimal


def _pairwise_coprime(monomials: Sequence[Monomial]) -> bool:
    used = set()
    for m in monomials:
        support = {i for i, e in enumerate(m) if e}
        if used & support:
            return False
        used |= support
    return True


def _strategy(monomials: Sequence[Monomial], n: int) -> int:
    """出现在最多生成元中的变量"""
    counts = [sum(1 for m in monomials if m[i]) for i in range(n)]
    return max(range(n), key=lambda i: (counts[i], -i))


def hilbert_numerator(monomials: Sequence[Monomial], n: int):
    """单项式理想 S/I 的 Hilbert 级数分子 N(t)，级数为 N(t)/(1-t)^n

    Args:
        monomials: 理想的单项式生成元（指数向量）
        n: 变量个数

    Returns:
        Z[t] 中的多项式
    """
    t = _SERIES_RING.gens[0]
    one = _SERIES_RING.one
    gens = minimalize(monomials)
    if not gens:
        return one
    if _pairwise_coprime(gens):
        result = one
        for m in gens:
            result *= one - t ** sum(m)
        return result

    i = _strategy(gens, n)
    pivot = tuple(1 if j == i else 0 for j in range(n))
    with_pivot = [m for m in gens if not m[i]] + [pivot]
    colon = [tuple(max(e - p, 0) for e, p in zip(m, pivot)) for m in gens]
    return hilbert_numerator(with_pivot, n) + t * hilbert_numerator(colon, n)
