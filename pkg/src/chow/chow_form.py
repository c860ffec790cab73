#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Chow形式模块 - Chow形式

超曲面的 Chow 形式就是定义形式本身（对偶变量 u0..uN）；有理点给出线性形式
Σ p_i u_i；一般情形在仿射图上消去主变量，剩下 k+1 个符号超平面的系数，
再用系数矩阵的极大子式（字典序）表示为 Plücker 坐标的形式。
"""

from itertools import combinations, permutations
from typing import Dict, List, Optional, Sequence, Tuple

from loguru import logger
from pydantic import BaseModel, ConfigDict, Field
from sympy.combinatorics import Permutation
from sympy.polys.matrices import DomainMatrix

from src.algebra.polynomial import Polynomial, PolyRing, primitive_form
from src.dynamics.subvariety import Subvariety
from src.groebner.ideal import Ideal, eliminate
from src.utils.exceptions import (
    ComputationError,
    PreconditionError,
    UnitIdealError,
    UnsupportedCaseError,
)


class ChowForm(BaseModel):
    """子簇（或循环）的 Chow 形式"""
    model_config = ConfigDict(arbitrary_types_allowed=True)

    N: int = Field(..., description="射影空间维数")
    dimension: int = Field(..., description="子簇维数 k")
    degree: int = Field(..., description="子簇次数 D")
    form: Polynomial = Field(..., description="对偶或 Plücker 坐标中的形式")
    kind: str = Field(..., description="hypersurface、point 或 plucker")

    def __str__(self):
        return str(self.form)


def dual_ring(ring: PolyRing) -> PolyRing:
    """对偶坐标 u0..uN 的多项式环"""
    return PolyRing([f"u{i}" for i in range(ring.ngens)], ring.field, "grevlex")


def plucker_names(N: int, k: int) -> List[str]:
    """(k+1)×(N+1) 矩阵极大子式的坐标名，按列集合的字典序"""
    sep = "_" if N >= 10 else ""
    return ["p_" + sep.join(str(c) for c in cols) for cols in combinations(range(N + 1), k + 1)]


def _grid_names(rows: int, cols: int, taken: Sequence[str]) -> List[List[str]]:
    taken = set(taken)
    grid = []
    for r in range(rows):
        row = []
        for c in range(cols):
            name = f"u{r}_{c}"
            while name in taken:
                name = f"_{name}"
            row.append(name)
        grid.append(row)
    return grid


def _point_coordinates(X: Subvariety) -> Optional[list]:
    """X 是单个有理点时返回其坐标，否则返回 None"""
    basis = X.canonical_basis()
    if len(basis) != X.N or any(g.total_degree() != 1 for g in basis):
        return None
    ring = X.ring
    unit = [tuple(1 if j == i else 0 for j in range(ring.ngens)) for i in range(ring.ngens)]
    rows = [[g.coefficient(m) for m in unit] for g in basis]
    kernel = DomainMatrix(rows, (len(rows), ring.ngens), ring.field.domain).nullspace()
    if kernel.shape[0] != 1:
        return None
    return kernel.to_list()[0]


def _good_chart(X: Subvariety) -> int:
    """选一个不包含任何最高维分量的坐标超平面 x_i = 0"""
    k = X.dimension
    for i, x in enumerate(X.ring.gens):
        try:
            section = Subvariety(X.ring, X.generators + (x,)).dimension
        except UnitIdealError:
            return i
        if section < k:
            return i
    raise ComputationError(f"找不到合适的仿射图: {X}")


def _dehomogenize(p: Polynomial, pivot: int, target: PolyRing) -> Polynomial:
    """令 x_pivot = 1 并搬到 target 中（按变量名）"""
    positions = {j: target.index(v) for j, v in enumerate(p.ring.variables) if j != pivot}
    zero = target.field.zero
    terms: Dict[tuple, object] = {}
    for monom, coeff in p.rep.items():
        key = [0] * target.ngens
        for j, pos in positions.items():
            key[pos] = monom[j]
        key = tuple(key)
        terms[key] = terms.get(key, zero) + coeff
    return Polynomial(target, target.raw.from_dict(terms))


def _minor(ring: PolyRing, grid: List[List[str]], cols: Tuple[int, ...]) -> Polynomial:
    size = len(cols)
    total = ring.zero
    for perm in permutations(range(size)):
        term = ring.one * Permutation(list(perm)).signature()
        for r, c in enumerate(perm):
            term = term * ring.gen(grid[r][cols[c]])
        total = total + term
    return total


def to_plucker(F: Polynomial, grid: List[List[str]], N: int, k: int) -> Polynomial:
    """把超平面系数 u 的形式写成 Plücker 坐标的形式

    在 Plücker 关系下表示不唯一，取线性方程组简化阶梯形的特解（自由变量为零）。

    Raises:
        ComputationError: F 不在 Plücker 坐标生成的子代数中
    """
    subsets = list(combinations(range(N + 1), k + 1))
    target = PolyRing(plucker_names(N, k), F.ring.field, "grevlex")
    minors = [_minor(F.ring, grid, cols) for cols in subsets]

    if F.total_degree() % (k + 1):
        raise ComputationError(f"形式的次数 {F.total_degree()} 不是 {k + 1} 的倍数")
    D = F.total_degree() // (k + 1)
    unknowns = target.monomials_of_degree(D)
    expansions = []
    for monom in unknowns:
        value = F.ring.one
        for minor, e in zip(minors, monom):
            if e:
                value = value * minor ** e
        expansions.append(value)

    rows_index: Dict[tuple, int] = {}
    for poly in expansions + [F]:
        for m in poly.monomials():
            rows_index.setdefault(m, len(rows_index))
    K = F.ring.field.domain
    matrix = [[K.zero] * (len(unknowns) + 1) for _ in rows_index]
    for col, poly in enumerate(expansions + [F]):
        for m, c in poly.rep.items():
            matrix[rows_index[m]][col] = c
    logger.debug(f"Plücker 线性方程组: {len(rows_index)} 个方程，{len(unknowns)} 个未知数")

    reduced, pivots = DomainMatrix(matrix, (len(rows_index), len(unknowns) + 1), K).rref()
    if len(unknowns) in pivots:
        error_msg = "消元得到的形式不能写成 Plücker 坐标的多项式"
        logger.error(error_msg)
        raise ComputationError(error_msg)
    values = reduced.to_list()
    terms = {unknowns[col]: values[row][len(unknowns)] for row, col in enumerate(pivots)}
    return target.from_terms(terms)


def _eliminated_form(X: Subvariety, k: int, budget=None) -> Tuple[Polynomial, List[List[str]]]:
    """在仿射图上消去主变量，得到 k+1 个符号超平面系数的形式"""
    ring = X.ring
    pivot = _good_chart(X)
    grid = _grid_names(k + 1, ring.ngens, list(ring.variables) + list(ring.field.parameters))
    affine = [v for j, v in enumerate(ring.variables) if j != pivot]
    big = PolyRing(affine + [name for row in grid for name in row], ring.field, "grevlex")

    generators = [_dehomogenize(g, pivot, big) for g in X.generators]
    for row in grid:
        plane = big.zero
        for c, name in enumerate(row):
            plane = plane + (big.gen(name) if c == pivot else big.gen(name) * big.gen(ring.variables[c]))
        generators.append(plane)
    logger.debug(f"Chow形式消元: 仿射图 x{pivot}=1，{len(generators)} 个生成元")

    eliminated = eliminate(Ideal(big, generators), affine, budget)
    forms = [g for g in eliminated.generators if not g.is_constant()]
    if len(forms) != 1:
        error_msg = f"消元理想不是主理想（{len(forms)} 个生成元），子簇可能不是既约的"
        logger.error(error_msg)
        raise UnsupportedCaseError(error_msg)
    return primitive_form(forms[0]), grid


def chow_form(X: Subvariety, budget=None) -> ChowForm:
    """子簇的 Chow 形式

    Args:
        X: k 维子簇
        budget: 一般情形消元的 S 对预算

    Returns:
        超曲面与点用对偶变量 u0..uN，一般情形用 Plücker 坐标 p_{i_0...i_k}

    Raises:
        BudgetExceededError: 一般情形消元超出预算
        UnsupportedCaseError: 消元理想不是主理想
    """
    k, D = X.dimension_degree()
    ring = X.ring
    if k == X.N - 1:
        dual = dual_ring(ring)
        form = dual.embed(X.hypersurface_form(), dict(zip(ring.variables, dual.variables)))
        return ChowForm(N=X.N, dimension=k, degree=form.total_degree(), form=form, kind="hypersurface")

    if k == 0 and D == 1:
        point = _point_coordinates(X)
        if point is not None:
            dual = dual_ring(ring)
            form = primitive_form(sum((u * c for u, c in zip(dual.gens, point)), dual.zero))
            logger.debug(f"点的Chow形式: {form}")
            return ChowForm(N=X.N, dimension=0, degree=1, form=form, kind="point")

    F, grid = _eliminated_form(X, k, budget)
    if k == 0:
        dual = dual_ring(ring)
        form = dual.embed(F, dict(zip(grid[0], dual.variables)))
        return ChowForm(N=X.N, dimension=0, degree=form.total_degree(), form=form, kind="point")
    form = primitive_form(to_plucker(F, grid, X.N, k))
    if form.total_degree() != D:
        logger.warning(f"Chow形式的次数 {form.total_degree()} 与子簇次数 {D} 不一致")
    return ChowForm(N=X.N, dimension=k, degree=form.total_degree(), form=form, kind="plucker")


def chow_form_of_cycle(components: Sequence[Tuple[Subvariety, int]], budget=None) -> ChowForm:
    """循环 Σ n_Y Y 的 Chow 形式 ∏ Ch(Y)^{n_Y}

    Raises:
        PreconditionError: 分量维数不同或重数不是正整数
    """
    if not components:
        raise PreconditionError("循环至少需要一个分量")
    forms = []
    for Y, n in components:
        if n < 1:
            raise PreconditionError(f"分量的重数必须是正整数: {n}")
        forms.append((chow_form(Y, budget), n))
    first = forms[0][0]
    if any(ch.dimension != first.dimension or ch.form.ring != first.form.ring for ch, _ in forms):
        raise PreconditionError("循环的各分量必须有相同的维数与 Chow 坐标")
    product = first.form.ring.one
    for ch, n in forms:
        product = product * ch.form ** n
    return ChowForm(N=first.N, dimension=first.dimension, degree=sum(ch.degree * n for ch, n in forms),
                    form=product, kind=first.kind)
