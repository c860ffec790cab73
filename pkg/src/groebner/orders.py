#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Gröbner基模块 - 单项式序

提供消元用的块序：被消去的变量组成第一块，保留变量组成第二块，
每块内部先比较加权次数，再按反字典序比较。该对象可直接作为 sympy 多项式环的单项式序。
"""

from typing import Optional, Sequence, Tuple

from sympy.polys.orderings import MonomialOrder


def weighted_grevlex(monomial: Sequence[int], weights: Sequence[int]):
    """加权分次反字典序的比较键（权全为1时即分次反字典序）"""
    return (sum(a * w for a, w in zip(monomial, weights)), tuple(reversed([-a for a in monomial])))


class EliminationOrder(MonomialOrder):
    """消元块序

    Attributes:
        drop: 被消去变量的下标（第一块）
        keep: 保留变量的下标（第二块）
        weights: 全部变量的权（缺省全为1）
    """

    alias = "elim"
    is_global = True
    is_default = False

    def __init__(self, drop: Sequence[int], keep: Sequence[int], weights: Optional[Sequence[int]] = None):
        self.drop: Tuple[int, ...] = tuple(drop)
        self.keep: Tuple[int, ...] = tuple(keep)
        size = len(self.drop) + len(self.keep)
        self.weights: Tuple[int, ...] = tuple(weights) if weights is not None else (1,) * size

    def __call__(self, monomial):
        blocks = []
        for block in (self.drop, self.keep):
            blocks.append(weighted_grevlex([monomial[i] for i in block], [self.weights[i] for i in block]))
        return tuple(blocks)

    def __eq__(self, other):
        return isinstance(other, EliminationOrder) and \
            (self.drop, self.keep, self.weights) == (other.drop, other.keep, other.weights)

    def __hash__(self):
        return hash((self.alias, self.drop, self.keep, self.weights))

    def __repr__(self):
        return f"EliminationOrder(drop={self.drop}, keep={self.keep}, weights={self.weights})"

    __str__ = __repr__
