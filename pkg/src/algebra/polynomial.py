#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
精确代数模块 - 多项式环与多项式

稀疏多元多项式的精确运算。系数存储与基本算术委托给 sympy 的 PolyRing，
本模块补充环描述（变量名、单项式序、权重）、确定性打印、规范化（本原形式）、
无平方部分、系数高度、复合与偏导数等操作。
"""

import math
import re
from collections import defaultdict
from functools import reduce
from itertools import combinations_with_replacement
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import mpmath
from loguru import logger
from sympy import Symbol
from sympy.polys import rings as sympy_rings
from sympy.polys.orderings import grevlex, grlex, lex

from src.algebra.fields import ScalarField
from src.utils.config import get_active_config
from src.utils.exceptions import (
    PreconditionError,
    RingMismatchError,
    UnsupportedCaseError,
    ZeroPolynomialError,
)

_ORDERS = {"lex": lex, "grlex": grlex, "grevlex": grevlex}
_IDENTIFIER = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")

Monomial = Tuple[int, ...]


def resolve_order(order):
    """把序名称或序对象解析为 sympy 可用的单项式序"""
    if isinstance(order, str):
        if order not in _ORDERS:
            raise RingMismatchError(f"不支持的单项式序: {order}")
        return _ORDERS[order]
    if callable(order):
        return order
    raise RingMismatchError(f"无法识别的单项式序: {order!r}")


class PolyRing:
    """多项式环描述：变量名、系数域、单项式序与权重"""

    def __init__(self, variables: Sequence[str], field: ScalarField, order="grevlex",
                 weights: Optional[Sequence[int]] = None):
        variables = tuple(variables)
        if not variables:
            raise RingMismatchError("多项式环至少需要一个变量")
        if len(set(variables)) != len(variables):
            raise RingMismatchError(f"变量名重复: {variables}")
        for name in variables:
            if not _IDENTIFIER.fullmatch(name):
                raise RingMismatchError(f"非法变量名: {name!r}")
        clash = set(variables) & set(field.parameters)
        if clash:
            raise RingMismatchError(f"变量名与参数名冲突: {sorted(clash)}")
        weights = tuple(weights) if weights is not None else (1,) * len(variables)
        if len(weights) != len(variables) or any(int(w) <= 0 for w in weights):
            raise RingMismatchError(f"权重必须为正整数且与变量一一对应: {weights}")

        self.variables = variables
        self.field = field
        self.order = order
        self.weights = tuple(int(w) for w in weights)
        self.raw = sympy_rings.PolyRing([Symbol(v) for v in variables], field.domain, resolve_order(order))

    @property
    def ngens(self) -> int:
        return len(self.variables)

    @property
    def order_key(self):
        return self.raw.order

    def index(self, name: str) -> int:
        try:
            return self.variables.index(name)
        except ValueError:
            raise RingMismatchError(f"变量 {name} 不在环 {self.variables} 中") from None

    def gen(self, name) -> "Polynomial":
        i = name if isinstance(name, int) else self.index(name)
        return Polynomial(self, self.raw.gens[i])

    @property
    def gens(self) -> List["Polynomial"]:
        return [Polynomial(self, g) for g in self.raw.gens]

    @property
    def zero(self) -> "Polynomial":
        return Polynomial(self, self.raw.zero)

    @property
    def one(self) -> "Polynomial":
        return Polynomial(self, self.raw.one)

    def constant(self, value) -> "Polynomial":
        return Polynomial(self, self.raw.ground_new(self.field.convert(value)))

    def from_terms(self, terms: Dict[Monomial, object]) -> "Polynomial":
        converted = {tuple(m): self.field.convert(c) for m, c in terms.items()}
        return Polynomial(self, self.raw.from_dict(converted))

    def wrap(self, rep) -> "Polynomial":
        return Polynomial(self, rep)

    def with_order(self, order) -> "PolyRing":
        return PolyRing(self.variables, self.field, order, self.weights)

    def with_field(self, field: ScalarField) -> "PolyRing":
        return PolyRing(self.variables, field, self.order, self.weights)

    def rename(self, mapping: Dict[str, str]) -> "PolyRing":
        """按映射改名得到新环（未出现在映射中的变量保持原名）"""
        return PolyRing([mapping.get(v, v) for v in self.variables], self.field, self.order, self.weights)

    def embed(self, p: "Polynomial", renaming: Optional[Dict[str, str]] = None) -> "Polynomial":
        """按变量名把另一个环中的多项式搬到本环

        Args:
            p: 源多项式
            renaming: 源变量名到本环变量名的映射（可选）

        Raises:
            RingMismatchError: 源多项式用到的变量在本环中不存在
        """
        renaming = renaming or {}
        positions = []
        for name in p.ring.variables:
            target = renaming.get(name, name)
            positions.append(self.variables.index(target) if target in self.variables else None)
        same_field = p.ring.field == self.field
        terms = {}
        for monom, coeff in p.rep.items():
            exps = [0] * self.ngens
            for pos, e in zip(positions, monom):
                if e:
                    if pos is None:
                        raise RingMismatchError(f"变量无法搬到环 {self.variables} 中: {p.ring.variables}")
                    exps[pos] += e
            terms[tuple(exps)] = coeff if same_field else self.field.convert(coeff)
        return Polynomial(self, self.raw.from_dict(terms))

    def monomials_of_degree(self, degree: int) -> List[Monomial]:
        """给定总次数的全部单项式，按分次反字典序降序排列"""
        n = self.ngens
        result = []
        for combo in combinations_with_replacement(range(n), degree):
            exps = [0] * n
            for i in combo:
                exps[i] += 1
            result.append(tuple(exps))
        result.sort(key=grevlex, reverse=True)
        return result

    def _key(self):
        return (self.variables, self.field, self.order, self.weights)

    def __eq__(self, other):
        return isinstance(other, PolyRing) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return f"PolyRing({','.join(self.variables)}; {self.field.label()}; {self.order})"


class Polynomial:
    """稀疏多元多项式（不可变值对象）"""

    __slots__ = ("ring", "rep")

    def __init__(self, ring: PolyRing, rep):
        self.ring = ring
        self.rep = rep

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise RingMismatchError(f"环不一致: {self.ring} 与 {other.ring}")
            return other.rep
        return self.ring.raw.ground_new(self.ring.field.convert(other))

    def __add__(self, other):
        return Polynomial(self.ring, self.rep + self._coerce(other))

    __radd__ = __add__

    def __sub__(self, other):
        return Polynomial(self.ring, self.rep - self._coerce(other))

    def __rsub__(self, other):
        return Polynomial(self.ring, self._coerce(other) - self.rep)

    def __neg__(self):
        return Polynomial(self.ring, -self.rep)

    def __mul__(self, other):
        return Polynomial(self.ring, self.rep * self._coerce(other))

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise PreconditionError(f"指数必须是非负整数: {exponent}")
        return Polynomial(self.ring, self.rep ** exponent)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self.rep == other.rep
        if isinstance(other, int):
            return self.rep == other
        return NotImplemented

    def __hash__(self):
        return hash((self.ring, frozenset(self.rep.items())))

    def __bool__(self):
        return bool(self.rep)

    @property
    def is_zero(self) -> bool:
        return not self.rep

    def is_constant(self) -> bool:
        return self.rep.is_ground

    def constant_value(self):
        """常数项（域元素）"""
        return self.rep.get(self.ring.raw.zero_monom, self.ring.field.zero)

    def terms(self) -> List[Tuple[Monomial, object]]:
        """按环的单项式序降序排列的 (指数向量, 系数) 列表"""
        return self.rep.terms()

    def monomials(self) -> List[Monomial]:
        return self.rep.monoms()

    def coefficient(self, monom: Monomial):
        return self.rep.get(tuple(monom), self.ring.field.zero)

    def total_degree(self) -> int:
        if self.is_zero:
            return -1
        return max(sum(m) for m in self.rep.itermonoms())

    def degree_in(self, var) -> int:
        i = var if isinstance(var, int) else self.ring.index(var)
        if self.is_zero:
            return -1
        return max(m[i] for m in self.rep.itermonoms())

    def variables_used(self) -> List[int]:
        used = set()
        for m in self.rep.itermonoms():
            used.update(i for i, e in enumerate(m) if e)
        return sorted(used)

    def is_homogeneous(self) -> bool:
        if self.is_zero:
            return True
        return len({sum(m) for m in self.rep.itermonoms()}) == 1

    def leading_monomial(self) -> Monomial:
        return self.rep.LM

    def leading_coefficient(self):
        return self.rep.LC

    def evaluate(self, point: Sequence):
        """在给定点（长度等于变量个数）处求值，返回域元素"""
        if len(point) != self.ring.ngens:
            raise RingMismatchError(f"求值点维数 {len(point)} 与变量个数 {self.ring.ngens} 不一致")
        values = [self.ring.field.convert(v) for v in point]
        total = self.ring.field.zero
        for monom, coeff in self.rep.items():
            term = coeff
            for value, e in zip(values, monom):
                if e:
                    term = term * value ** e
            total += term
        return total

    def monic(self) -> "Polynomial":
        return Polynomial(self.ring, self.rep.monic())

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"Polynomial({format_poly(self)!r}, {self.ring.field.label()})"


def strip_zero_terms(rep):
    """去除 sympy 在正特征下求导可能留下的零系数项"""
    return rep.ring.from_dict({m: c for m, c in rep.items() if c})


def weighted_degree_check(p: Polynomial) -> Tuple[bool, Optional[int]]:
    """检查多项式在环权重下是否加权齐次

    Args:
        p: 非零多项式

    Returns:
        (是否齐次, 公共加权次数或None)

    Raises:
        ZeroPolynomialError: 零多项式
    """
    if p.is_zero:
        raise ZeroPolynomialError("零多项式的加权次数无定义")
    weights = p.ring.weights
    degrees = {sum(w * e for w, e in zip(weights, m)) for m in p.rep.itermonoms()}
    if len(degrees) == 1:
        return True, degrees.pop()
    return False, None


def integer_coefficients(coeffs: Iterable) -> List[int]:
    """把一组有理系数同时清分母、除去整数容量，返回互素的整数向量"""
    coeffs = list(coeffs)
    denominator = reduce(math.lcm, (int(c.denominator) for c in coeffs), 1)
    ints = [int(c.numerator) * (denominator // int(c.denominator)) for c in coeffs]
    content = reduce(math.gcd, ints, 0) or 1
    return [i // content for i in ints]


def poly_height(p: Polynomial) -> mpmath.mpf:
    """多项式系数向量的绝对对数射影高度（自然对数）

    Args:
        p: 有理系数的非零多项式

    Returns:
        ln(max |c|)，其中 c 为清分母并除去容量后的整数系数
    """
    if not p.ring.field.is_rationals:
        raise UnsupportedCaseError(f"高度只对有理系数多项式定义，当前域: {p.ring.field.label()}")
    if p.is_zero:
        raise ZeroPolynomialError("零多项式的高度无定义")
    ints = integer_coefficients(p.rep.coeffs())
    with mpmath.workprec(get_active_config().real_precision_bits):
        return mpmath.log(mpmath.mpf(max(abs(i) for i in ints)))


def compose(g: Polynomial, f) -> Polynomial:
    """把 f 的第 i 个坐标代入 g 的第 i 个变量

    Args:
        g: 齐次多项式
        f: 态射或坐标多项式序列

    Returns:
        g∘f，位于 f 所在的环中
    """
    coords = list(getattr(f, "coords", f))
    if not coords:
        raise RingMismatchError("复合的坐标为空")
    if len(coords) != g.ring.ngens:
        raise RingMismatchError(f"变量个数不匹配: g 有 {g.ring.ngens} 个变量，f 有 {len(coords)} 个坐标")
    target = coords[0].ring
    if g.ring.field != target.field:
        raise RingMismatchError(f"系数域不一致: {g.ring.field.label()} 与 {target.field.label()}")
    raw = target.raw
    powers: List[Dict[int, object]] = [{} for _ in coords]
    result = raw.zero
    for monom, coeff in g.rep.items():
        term = raw.ground_new(coeff)
        for i, e in enumerate(monom):
            if e:
                if e not in powers[i]:
                    powers[i][e] = coords[i].rep ** e
                term = term * powers[i][e]
        result += term
    return Polynomial(target, result)


def partial_derivative(p: Polynomial, var, order: int = 1) -> Polynomial:
    """精确的形式迭代偏导数"""
    if not isinstance(order, int) or order < 1:
        raise PreconditionError(f"求导阶数必须是正整数: {order}")
    i = var if isinstance(var, int) else p.ring.index(var)
    rep = p.rep
    for _ in range(order):
        if not rep:
            break
        rep = strip_zero_terms(rep.diff(i))
    return Polynomial(p.ring, rep)


def parameter_numerators(p: Polynomial) -> Dict[Monomial, object]:
    """有理函数域系数的多项式：清除公共分母后，每个单项式对应参数多项式（分子环元素）"""
    items = list(p.rep.items())
    common = reduce(lambda a, b: a.lcm(b), (c.denom for _, c in items))
    return {m: c.numer * common.exquo(c.denom) for m, c in items}


def from_parameter_numerators(ring: PolyRing, numerators: Dict[Monomial, object]) -> Polynomial:
    frac = ring.field.domain.field
    return Polynomial(ring, ring.raw.from_dict({m: frac.new(c) for m, c in numerators.items() if c}))


def flatten_parameters(p: Polynomial):
    """把 K(a)[x] 中的多项式清分母后视为基域上 K[a, x] 的多项式"""
    field = p.ring.field
    symbols = [Symbol(a) for a in field.parameters] + [Symbol(v) for v in p.ring.variables]
    flat = sympy_rings.PolyRing(symbols, field.base.domain, grevlex)
    terms = {}
    for xm, c in parameter_numerators(p).items():
        for am, v in c.items():
            terms[tuple(am) + tuple(xm)] = v
    return flat.from_dict(terms)


def unflatten_parameters(rep, ring: PolyRing) -> Polynomial:
    k = len(ring.field.parameters)
    frac_ring = ring.field.domain.field.ring
    groups: Dict[Monomial, dict] = defaultdict(dict)
    for monom, value in rep.items():
        groups[tuple(monom[k:])][tuple(monom[:k])] = value
    return from_parameter_numerators(ring, {xm: frac_ring.from_dict(d) for xm, d in groups.items()})


def primitive_form(p: Polynomial) -> Polynomial:
    """规范化标量倍数

    Q 上清分母并除去整数容量、首项系数为正；F_p 上首一；
    有理函数域上清分母并除去参数多项式容量，首项系数的首项系数为正（或为1）。
    """
    if p.is_zero:
        raise ZeroPolynomialError("零多项式没有本原形式")
    field = p.ring.field
    if field.is_prime_field:
        return p.monic()
    if field.is_rationals:
        ints = integer_coefficients([c for _, c in p.rep.items()])
        rep = p.ring.raw.from_dict({m: field.convert(i) for (m, _), i in zip(p.rep.items(), ints)})
        if rep.LC < 0:
            rep = -rep
        return Polynomial(p.ring, rep)

    numerators = parameter_numerators(p)
    content = reduce(lambda a, b: a.gcd(b), numerators.values())
    numerators = {m: c.exquo(content) for m, c in numerators.items()}
    lead = numerators[p.rep.LM]
    if field.base.is_rationals:
        scalars = [v for c in numerators.values() for v in c.coeffs()]
        ints = integer_coefficients(scalars)
        scale = field.base.domain.quo(field.base.convert(ints[0]), scalars[0])
        if lead.LC * scale < 0:
            scale = -scale
    else:
        scale = field.base.domain.quo(field.base.domain.one, lead.LC)
    numerators = {m: c.mul_ground(scale) for m, c in numerators.items()}
    return from_parameter_numerators(p.ring, numerators)


def _pth_root(rep, p: int):
    return rep.ring.from_dict({tuple(e // p for e in m): c for m, c in rep.items()})


def _radical_positive_characteristic(rep, p: int):
    """完全域 F_p 上多项式的无平方部分（导数与 gcd，配合 p 次根）"""
    ring = rep.ring
    if rep.is_ground:
        return ring.one
    partials = [strip_zero_terms(rep.diff(i)) for i in range(ring.ngens)]
    if not any(partials):
        return _radical_positive_characteristic(_pth_root(rep, p), p)
    g = rep
    for q in partials:
        if q:
            g = g.gcd(q)
    h = rep.exquo(g)
    c = g.gcd(h)
    while not c.is_ground:
        g = g.exquo(c)
        c = g.gcd(h)
    if g.is_ground:
        return h.monic()
    return (h * _radical_positive_characteristic(g, p)).monic()


def _radical(rep, characteristic: int):
    if characteristic == 0:
        return rep.sqf_part()
    return _radical_positive_characteristic(rep, characteristic)


def square_free_part(p: Polynomial) -> Polynomial:
    """无平方部分（根理想的生成元），结果经过 primitive_form 规范化"""
    if p.is_zero:
        raise ZeroPolynomialError("零多项式没有无平方部分")
    field = p.ring.field
    if field.is_function_field:
        radical = unflatten_parameters(_radical(flatten_parameters(p), field.characteristic), p.ring)
    else:
        radical = Polynomial(p.ring, _radical(p.rep, field.characteristic))
    logger.debug(f"无平方部分: 次数 {p.total_degree()} -> {radical.total_degree()}")
    return primitive_form(radical)


# ---------------------------------------------------------------- 打印


def format_monomial(monom: Monomial, names: Sequence[str]) -> str:
    parts = []
    for name, e in zip(names, monom):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def _scaled_term(numerator: int, denominator: int, monomial: str) -> Tuple[bool, str]:
    n = abs(numerator)
    number = str(n) if denominator == 1 else f"{n}/{denominator}"
    if not monomial:
        body = number
    elif n == 1 and denominator == 1:
        body = monomial
    else:
        body = f"{number}*{monomial}"
    return numerator < 0, body


def _base_term(value, base: ScalarField, monomial: str) -> Tuple[bool, str]:
    if base.is_prime_field:
        return _scaled_term(base.residue(value), 1, monomial)
    return _scaled_term(int(value.numerator), int(value.denominator), monomial)


def _join(pieces: List[Tuple[bool, str]]) -> str:
    if not pieces:
        return "0"
    out = []
    for i, (negative, body) in enumerate(pieces):
        if i == 0:
            out.append(f"-{body}" if negative else body)
        else:
            out.append(f" - {body}" if negative else f" + {body}")
    return "".join(out)


def _parameter_poly_pieces(poly, field: ScalarField, monomial: str) -> List[Tuple[bool, str]]:
    pieces = []
    for am, value in poly.terms():
        joined = "*".join(s for s in (format_monomial(am, field.parameters), monomial) if s)
        pieces.append(_base_term(value, field.base, joined))
    return pieces


def _coefficient_pieces(coeff, field: ScalarField, monomial: str) -> List[Tuple[bool, str]]:
    if not field.is_function_field:
        return [_base_term(coeff, field, monomial)]
    numer, denom = coeff.numer, coeff.denom
    if denom.is_ground:
        scaled = numer.mul_ground(field.base.domain.quo(field.base.domain.one, denom.LC))
        return _parameter_poly_pieces(scaled, field, monomial)
    body = f"({_join(_parameter_poly_pieces(numer, field, ''))})/({_join(_parameter_poly_pieces(denom, field, ''))})"
    if monomial:
        body = f"{body}*{monomial}"
    return [(False, body)]


def format_scalar(value, field: ScalarField) -> str:
    """把单个域元素打印为语法中的常数表达式"""
    return _join(_coefficient_pieces(value, field, "")) if value else "0"


def format_poly(p: Polynomial) -> str:
    """确定性打印：单项式按环序降序，F_p 剩余非负，参数系数展开为单项式之和"""
    if p.is_zero:
        return "0"
    pieces = []
    for monom, coeff in p.rep.terms():
        pieces.extend(_coefficient_pieces(coeff, p.ring.field, format_monomial(monom, p.ring.variables)))
    return _join(pieces)
