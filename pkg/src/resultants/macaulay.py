#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
结式模块 - Macaulay结式

n+1 个变量中 n+1 个齐次形式的 Macaulay 结式，使用经典的行列式商构造：
Macaulay 矩阵的行列式除以其多余子式的行列式。主变量以外的环变量视为系数，
此时结式是这些变量的多项式。素域上的形式先提升为整系数形式。多余子式退化时做带种子的稠密坐标变换后重试，
仍然退化时对形式做扰动，取扰动结式的常数项。
"""

import random
from typing import Dict, List, Optional, Sequence

from loguru import logger
from sympy import Dummy, Symbol
from sympy.polys.matrices import DomainMatrix

from src.algebra.fields import ScalarField
from src.algebra.polynomial import Monomial, Polynomial, PolyRing, compose
from src.utils.config import get_active_config
from src.utils.exceptions import (
    DegenerateResultantError,
    NotHomogeneousError,
    PreconditionError,
    RingMismatchError,
)


class ResultantSpec:
    """结式的输入：n+1 个在主变量中齐次的形式

    Attributes:
        forms: 输入形式（位于同一环）
        main_vars: 主变量名，个数等于形式个数
        degrees: 各形式关于主变量的次数
    """

    def __init__(self, forms: Sequence[Polynomial], main_vars: Optional[Sequence[str]] = None):
        forms = list(forms)
        if not forms:
            raise RingMismatchError("结式至少需要一个形式")
        ring = forms[0].ring
        for form in forms:
            if form.ring != ring:
                raise RingMismatchError("结式的输入形式必须位于同一环中")
        main_vars = tuple(main_vars) if main_vars is not None else ring.variables
        if len(main_vars) != len(forms):
            raise RingMismatchError(f"形式个数 {len(forms)} 与主变量个数 {len(main_vars)} 不一致")
        self.ring = ring
        self.forms = forms
        self.main_vars = main_vars
        self.main_index = [ring.index(v) for v in main_vars]
        self.extra_index = [i for i in range(ring.ngens) if i not in self.main_index]
        self.degrees = [self._main_degree(form) for form in forms]

    def _main_degree(self, form: Polynomial) -> int:
        if form.is_zero:
            raise PreconditionError("结式的输入形式不能为零")
        degrees = {sum(m[i] for i in self.main_index) for m in form.monomials()}
        if len(degrees) != 1:
            error_msg = f"形式关于主变量 {self.main_vars} 不是齐次的: {form}"
            logger.error(error_msg)
            raise NotHomogeneousError(error_msg)
        degree = degrees.pop()
        if degree < 1:
            raise PreconditionError(f"结式的输入形式次数必须至少为1: {form}")
        return degree

    @property
    def coefficient_ring(self) -> Optional[PolyRing]:
        """非主变量构成的系数环（没有非主变量时为 None）"""
        if not self.extra_index:
            return None
        return PolyRing([self.ring.variables[i] for i in self.extra_index], self.ring.field, "grevlex")


def _monomials(n: int, degree: int) -> List[Monomial]:
    if n == 1:
        return [(degree,)]
    result = []
    for first in range(degree, -1, -1):
        for rest in _monomials(n - 1, degree - first):
            result.append((first,) + rest)
    return result


def _coefficient_domain(spec: ResultantSpec):
    """行列式所在的整环，以及把系数转换进去的函数"""
    base = spec.ring.field.domain
    if not spec.extra_index:
        return base, lambda extras: extras[()]

    symbols = [Symbol(spec.ring.variables[i]) for i in spec.extra_index]
    domain = base.poly_ring(*symbols)
    return domain, lambda extras: domain.ring.from_dict(dict(extras))


def _split_form(form: Polynomial, spec: ResultantSpec, convert) -> Dict[Monomial, object]:
    grouped: Dict[Monomial, Dict[Monomial, object]] = {}
    for monom, coeff in form.rep.items():
        main = tuple(monom[i] for i in spec.main_index)
        extra = tuple(monom[i] for i in spec.extra_index)
        grouped.setdefault(main, {})[extra] = coeff
    return {main: convert(extras) for main, extras in grouped.items()}


def _determinant(rows: List[List], domain):
    if not rows:
        return domain.one
    return DomainMatrix(rows, (len(rows), len(rows)), domain).det()


def _quotient_of_determinants(spec: ResultantSpec, perturbed: bool = False):
    """Macaulay 矩阵行列式除以多余子式

    perturbed 为真时把 F_i 换成 F_i - s·x_i^{d_i}，在 s 的多项式环上做除法后取常数项。
    此时多余子式关于 s 的首项系数为 ±1，商总是存在。
    """
    base, convert = _coefficient_domain(spec)
    domain = base
    if perturbed:
        domain = base.poly_ring(Dummy("s"))
        plain = convert

        def convert(extras):
            return domain.ring.ground_new(plain(extras))

    degrees = spec.degrees
    n = len(degrees)
    top = sum(d - 1 for d in degrees) + 1
    monomials = _monomials(n, top)
    column = {m: j for j, m in enumerate(monomials)}
    split = [_split_form(form, spec, convert) for form in spec.forms]
    if perturbed:
        s = domain.ring.gens[0]
        for i, d in enumerate(degrees):
            power = tuple(d if k == i else 0 for k in range(n))
            split[i][power] = split[i].get(power, domain.zero) - s

    rows = []
    for alpha in monomials:
        i = next(k for k in range(n) if alpha[k] >= degrees[k])
        shift = tuple(a - (degrees[k] if k == i else 0) for k, a in enumerate(alpha))
        row = [domain.zero] * len(monomials)
        for beta, coeff in split[i].items():
            row[column[tuple(u + b for u, b in zip(shift, beta))]] = coeff
        rows.append(row)

    # 被至少两个 x_i^{d_i} 整除的单项式给出多余子式
    extraneous = [j for j, alpha in enumerate(monomials)
                  if sum(1 for k in range(n) if alpha[k] >= degrees[k]) >= 2]
    minor = [[rows[r][c] for c in extraneous] for r in extraneous]

    logger.debug(f"Macaulay矩阵: {len(monomials)} 阶，多余子式 {len(extraneous)} 阶，次数 {degrees}")
    denominator = _determinant(minor, domain)
    if not denominator:
        return None
    value = domain.exquo(_determinant(rows, domain), denominator)
    return value.get(domain.ring.zero_monom, base.zero) if perturbed else value


def _lifted(spec: ResultantSpec) -> ResultantSpec:
    """素域上的形式按 [0, p-1] 中的代表元提升为整系数形式"""
    field = spec.ring.field
    if not field.is_prime_field:
        return spec
    ring = spec.ring.with_field(ScalarField.rationals())
    forms = [ring.from_terms({m: field.residue(c) for m, c in form.rep.items()}) for form in spec.forms]
    return ResultantSpec(forms, spec.main_vars)


def _unipotent(size: int, rng: random.Random, lower: bool) -> List[List[int]]:
    matrix = [[int(i == j) for j in range(size)] for i in range(size)]
    for i in range(size):
        for j in range(size):
            if (j < i if lower else j > i):
                matrix[i][j] = rng.choice((-1, 1)) * rng.randint(1, 7)
    return matrix


def _generic_change(spec: ResultantSpec, rng: random.Random) -> ResultantSpec:
    """主变量上的稠密代换 x -> L·U·x，L 下三角、U 上三角且对角线为1（行列式为1，结式不变）"""
    ring = spec.ring
    size = len(spec.main_index)
    lower, upper = _unipotent(size, rng, True), _unipotent(size, rng, False)
    matrix = [[sum(lower[i][k] * upper[k][j] for k in range(size)) for j in range(size)]
              for i in range(size)]
    images = list(ring.gens)
    for a, j in enumerate(spec.main_index):
        image = ring.zero
        for b, k in enumerate(spec.main_index):
            if matrix[a][b]:
                image = image + ring.gen(k) * matrix[a][b]
        images[j] = image
    return ResultantSpec([compose(form, images) for form in spec.forms], spec.main_vars)


def _to_result(value, spec: ResultantSpec):
    field = spec.ring.field
    if not spec.extra_index:
        if field.is_prime_field:
            return field.convert(int(value.numerator))
        return value
    coefficient_ring = spec.coefficient_ring
    if field.is_prime_field:
        return coefficient_ring.from_terms({m: int(c.numerator) for m, c in value.items()})
    return Polynomial(coefficient_ring, coefficient_ring.raw.from_dict(dict(value.items())))


def macaulay_resultant(spec: ResultantSpec, retries: Optional[int] = None, perturb: bool = True):
    """Macaulay 结式

    Args:
        spec: 输入形式与主变量
        retries: 多余子式退化时的坐标变换重试次数，None 表示使用当前配置
        perturb: 坐标变换都退化时是否改用扰动 F_i - s·x_i^{d_i} 取常数项

    Returns:
        没有非主变量时返回系数域元素；否则返回非主变量的多项式

    Raises:
        DegenerateResultantError: 不允许扰动且重试后多余子式仍然退化
    """
    config = get_active_config()
    if retries is None:
        retries = config.resultant_retries
    rng = random.Random(config.seed)

    working = _lifted(spec)
    current = working
    for attempt in range(retries + 1):
        value = _quotient_of_determinants(current)
        if value is not None:
            if attempt:
                logger.debug(f"第 {attempt} 次坐标变换后多余子式非退化")
            return _to_result(value, spec)
        logger.debug(f"多余子式退化，进行第 {attempt + 1} 次通用坐标变换")
        current = _generic_change(working, rng)

    if perturb:
        logger.debug(f"{retries} 次坐标变换后多余子式仍然退化，改用扰动形式")
        return _to_result(_quotient_of_determinants(working, perturbed=True), spec)

    error_msg = f"经过 {retries} 次坐标变换后多余子式仍然退化，次数 {spec.degrees}"
    logger.error(error_msg)
    raise DegenerateResultantError(error_msg)


def resultant_of(forms: Sequence[Polynomial], main_vars: Optional[Sequence[str]] = None):
    """macaulay_resultant 的便捷入口"""
    return macaulay_resultant(ResultantSpec(forms, main_vars))
