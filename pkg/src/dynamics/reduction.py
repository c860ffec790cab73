#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
动力学模块 - 模p约化

有理系数的态射与子簇先取整系数本原代表，再逐系数约化到 F_p。
好约化判定：p 不整除整系数代表的 Macaulay 结式。
"""

from typing import Union

from loguru import logger
from sympy import isprime

from src.algebra.fields import ScalarField
from src.algebra.polynomial import Polynomial, PolyRing, primitive_form
from src.dynamics.morphism import Morphism
from src.dynamics.subvariety import Subvariety
from src.utils.exceptions import BadReductionError, InvalidPrimeError, UnsupportedCaseError


def _check_prime(p: int):
    if not isinstance(p, int) or p < 2 or not isprime(p):
        error_msg = f"约化的模数必须是素数: {p}"
        logger.error(error_msg)
        raise InvalidPrimeError(error_msg)


def _check_rational(ring: PolyRing):
    if not ring.field.is_rationals:
        raise UnsupportedCaseError(f"只能约化有理系数的对象，当前域: {ring.field.label()}")


def _reduce_poly(p: Polynomial, target: PolyRing) -> Polynomial:
    """整系数多项式逐系数约化"""
    return target.from_terms({m: int(c.numerator) for m, c in p.rep.items()})


def integer_resultant(f: Morphism) -> int:
    """整系数本原代表的 Macaulay 结式（整数）"""
    _check_rational(f.ring)
    value = Morphism(f.normalized_coords(), check=False).resultant
    return int(value.numerator)


def good_reduction(f: Morphism, p: int) -> bool:
    """p 是否为 f 的好约化素数

    Args:
        f: 有理系数态射
        p: 素数

    Returns:
        p 不整除整系数代表的结式时为 True
    """
    _check_prime(p)
    result = integer_resultant(f) % p != 0
    logger.debug(f"好约化判定: p={p} -> {result}")
    return result


def reduce_mod_p(obj: Union[Morphism, Subvariety], p: int) -> Union[Morphism, Subvariety]:
    """把有理系数的态射或子簇约化到 F_p

    Raises:
        InvalidPrimeError: p 不是素数
        BadReductionError: 子簇的生成元约化为零，或态射在 p 处坏约化
    """
    _check_prime(p)
    _check_rational(obj.ring)
    target = obj.ring.with_field(ScalarField.prime(p))

    if isinstance(obj, Morphism):
        if not good_reduction(obj, p):
            error_msg = f"态射在 p={p} 处坏约化: {obj}"
            logger.error(error_msg)
            raise BadReductionError(error_msg)
        return Morphism([_reduce_poly(c, target) for c in obj.normalized_coords()], check=False)

    reduced = []
    for g in obj.generators:
        image = _reduce_poly(primitive_form(g), target)
        if image.is_zero:
            error_msg = f"生成元 {g} 在模 {p} 下约化为零"
            logger.error(error_msg)
            raise BadReductionError(error_msg)
        reduced.append(image)
    return Subvariety(target, reduced)
