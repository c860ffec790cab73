#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
精确代数模块 - 标量域

封装三类精确标量域：有理数域 Q、素域 F_p，以及带命名参数的有理函数域 K(a0, ..., ak)。
标量本身直接使用 sympy 域元素表示（最简分数、[0, p-1] 中的剩余、约分后的多项式分式）。
"""

from fractions import Fraction
from functools import lru_cache
from typing import Any, Optional, Tuple

from loguru import logger
from sympy import Symbol, isprime
from sympy.polys.domains import FF, QQ

from src.utils.exceptions import BadReductionError, InvalidPrimeError, RingMismatchError


class ScalarField:
    """精确标量域

    Attributes:
        kind: "rationals"、"prime" 或 "function"
        characteristic: 特征（Q 与 Q(a) 为 0）
        parameters: 有理函数域的参数名
        base: 有理函数域的基域（Q 或 F_p），其它情形为 None
        domain: 对应的 sympy 域对象
    """

    def __init__(self, kind: str, domain, characteristic: int = 0,
                 parameters: Tuple[str, ...] = (), base: Optional["ScalarField"] = None):
        self.kind = kind
        self.domain = domain
        self.characteristic = characteristic
        self.parameters = tuple(parameters)
        self.base = base

    @staticmethod
    @lru_cache(maxsize=None)
    def rationals() -> "ScalarField":
        """有理数域 Q"""
        return ScalarField("rationals", QQ)

    @staticmethod
    @lru_cache(maxsize=None)
    def prime(p: int) -> "ScalarField":
        """素域 F_p

        Args:
            p: 素数特征

        Raises:
            InvalidPrimeError: p 不是素数
        """
        if not isinstance(p, int) or p < 2 or not isprime(p):
            error_msg = f"素域特征必须是素数: {p}"
            logger.error(error_msg)
            raise InvalidPrimeError(error_msg)
        return ScalarField("prime", FF(p, symmetric=False), characteristic=p)

    @staticmethod
    def function_field(base: "ScalarField", parameters) -> "ScalarField":
        """基域上的有理函数域 base(a0, ..., ak)

        Args:
            base: 基域，只能是 Q 或 F_p
            parameters: 参数名（互不相同）
        """
        return _function_field(base, tuple(parameters))

    @property
    def is_rationals(self) -> bool:
        return self.kind == "rationals"

    @property
    def is_prime_field(self) -> bool:
        return self.kind == "prime"

    @property
    def is_function_field(self) -> bool:
        return self.kind == "function"

    @property
    def base_field(self) -> "ScalarField":
        """常数所在的域：有理函数域返回基域，否则返回自身"""
        return self.base if self.base is not None else self

    @property
    def zero(self):
        return self.domain.zero

    @property
    def one(self):
        return self.domain.one

    def convert(self, value: Any):
        """把整数、分数或域元素转换为本域元素

        Raises:
            BadReductionError: 在 F_p 中分母被 p 整除
        """
        if isinstance(value, bool):
            value = int(value)
        if isinstance(value, Fraction):
            if self.is_prime_field and value.denominator % self.characteristic == 0:
                raise BadReductionError(f"分母 {value.denominator} 在 F_{self.characteristic} 中不可逆")
            num = self.domain.convert(value.numerator)
            den = self.domain.convert(value.denominator)
            return self.domain.quo(num, den)
        if isinstance(value, int):
            return self.domain.convert(value)
        if self.is_function_field and self.base.domain.of_type(value):
            return self.domain.convert_from(value, self.base.domain)
        return self.domain.convert(value)

    def parameter(self, name: str):
        """返回参数 name 对应的域元素"""
        if name not in self.parameters:
            raise RingMismatchError(f"未知参数: {name}")
        return self.domain.field.gens[self.parameters.index(name)]

    def residue(self, value) -> int:
        """F_p 元素的非负代表元"""
        return int(self.domain.to_int(value)) % self.characteristic

    def is_scalar(self, value) -> bool:
        return self.domain.of_type(value)

    def label(self) -> str:
        """用于报告与日志的域名称"""
        if self.is_rationals:
            return "QQ"
        if self.is_prime_field:
            return f"GF({self.characteristic})"
        return f"{self.base.label()}({','.join(self.parameters)})"

    def _key(self):
        return (self.kind, self.characteristic, self.parameters,
                self.base._key() if self.base is not None else None)

    def __eq__(self, other):
        return isinstance(other, ScalarField) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return f"ScalarField({self.label()})"


@lru_cache(maxsize=None)
def _function_field(base: ScalarField, parameters: Tuple[str, ...]) -> ScalarField:
    if base.is_function_field:
        raise RingMismatchError("不支持嵌套的有理函数域")
    if not parameters or len(set(parameters)) != len(parameters):
        raise RingMismatchError(f"参数名必须非空且互不相同: {parameters}")
    domain = base.domain.frac_field(*[Symbol(name) for name in parameters])
    return ScalarField("function", domain, characteristic=base.characteristic,
                       parameters=parameters, base=base)
