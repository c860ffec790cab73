#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
高度模块 - 显式常数

超曲面正像高度差 |h(f(X)) - d·deg(f(X))/deg(X)·h(X)| ≤ C(f, N, D) 中的常数。
上界常数与下界常数都是 h(f) 的仿射函数，合并常数取两者逐项的最大值。

默认按公式求值；example_literal 模式重现算例中印出的代入方式
（ln τ(D') → ln(dD)，(d^N)^τ → d^τ，二项式 → C(3τ-d, 2τ-d)，内层 log C → ⌈Wustholz界⌉）。
"""

from math import comb
from typing import Optional

import mpmath
from loguru import logger
from pydantic import BaseModel, ConfigDict, Field

from src.chow.induced_map import tau
from src.resultants.wustholz import wustholz_exponent, wustholz_height_bound
from src.utils.config import get_active_config
from src.utils.exceptions import PreconditionError


class LinearBound(BaseModel):
    """形如 a·h(f) + b 的常数"""
    model_config = ConfigDict(arbitrary_types_allowed=True)

    hf_coefficient: mpmath.mpf = Field(..., description="h(f) 的系数")
    constant: mpmath.mpf = Field(..., description="常数项")

    def at(self, hf) -> mpmath.mpf:
        return self.hf_coefficient * hf + self.constant

    @classmethod
    def maximum(cls, first: "LinearBound", second: "LinearBound") -> "LinearBound":
        """逐项取最大值，对所有 h(f) ≥ 0 同时不小于两者"""
        return cls(hf_coefficient=max(first.hf_coefficient, second.hf_coefficient),
                   constant=max(first.constant, second.constant))


class ConstantReport(BaseModel):
    """常数 C(f, N, D) 的全部中间量"""
    model_config = ConfigDict(arbitrary_types_allowed=True)

    N: int
    d: int
    D: int
    hf: mpmath.mpf
    mode: str = Field(..., description="formula 或 example-literal")
    image_degree: int = Field(..., description="像的次数 D'")
    tau_D: int
    tau_image: int
    e_D: int
    wustholz_exponent: int = Field(..., description="B = C(D + N·d^N + 1, N)")
    wustholz_bound: mpmath.mpf = Field(..., description="B + ln(B!)")
    binomial: int = Field(..., description="下界公式中的二项式系数")
    upper: LinearBound
    lower: LinearBound
    combined: LinearBound
    value: mpmath.mpf = Field(..., description="合并常数在给定 h(f) 处的值")
    precision: int = Field(..., description="实数运算的二进制精度")


def coefficient_count(N: int, d: int, D: int) -> int:
    """下界中的系数个数 τ，取在一般情形的像次数类 d^{N-1}·D 上"""
    return tau(N, d ** (N - 1) * D)


def e_of_D(N: int, d: int, D: int) -> int:
    """e(D) = (τ - 1)·d^N + 2"""
    return (coefficient_count(N, d, D) - 1) * d ** N + 2


def upper_bound_constant(N: int, d: int, D: int, image_degree: int, W) -> LinearBound:
    """(D'/D / d^{N-1})·(2d^{N-1}D·h(f) + ln N + B + ln(B!))"""
    ratio = mpmath.mpf(image_degree) / D / d ** (N - 1)
    return LinearBound(hf_coefficient=ratio * 2 * d ** (N - 1) * D,
                       constant=ratio * (mpmath.log(N) + W))


def height_constant_C(N: int, d: int, D: int, hf, image_degree: Optional[int] = None,
                      example_literal: bool = False) -> ConstantReport:
    """计算显式常数 C(f, N, D)

    Args:
        N: 射影空间维数
        d: 态射次数（≥ 2）
        D: 超曲面次数
        hf: 态射高度 h(f)
        image_degree: 像的次数 D'，默认公式模式取 d^{N-1}·D，算例模式取 D
        example_literal: 是否重现算例中印出的算术

    Returns:
        含上界、下界与合并常数的报告
    """
    if N < 1 or D < 1:
        raise PreconditionError(f"要求 N, D ≥ 1: N={N}, D={D}")
    if d < 2:
        raise PreconditionError(f"要求 d ≥ 2: d={d}")
    bits = get_active_config().real_precision_bits
    with mpmath.workprec(bits):
        hf = mpmath.mpf(hf)
        if hf < 0:
            raise PreconditionError(f"h(f) 必须非负: {hf}")
        if image_degree is None:
            image_degree = D if example_literal else d ** (N - 1) * D
        t_D = coefficient_count(N, d, D)
        t_image = tau(N, image_degree)
        e_D = e_of_D(N, d, D)
        B = wustholz_exponent(N, D, d)
        W = wustholz_height_bound(N, D, d, bits)
        dN = d ** N
        ratio = mpmath.mpf(image_degree) / D / d ** (N - 1)

        if example_literal:
            log_tau_image = mpmath.log(d * D)
            binomial = comb(3 * t_D - d, 2 * t_D - d)
            power = d ** t_D
            inner_log = mpmath.ceil(W)
        else:
            log_tau_image = mpmath.log(t_image)
            binomial = comb(t_D - 1 + e_D - dN, e_D - dN)
            power = dN ** t_D
            inner_log = W
        K = 4 * t_D * (t_D + 1) * power
        inner = (mpmath.log(N) + inner_log + log_tau_image
                 + (t_D + 7) * mpmath.log(t_D + 1) * dN)
        lower = LinearBound(hf_coefficient=ratio * K * 2 * d ** (N - 1) * D,
                            constant=ratio * (log_tau_image + mpmath.log(binomial) + K * inner))
        upper = upper_bound_constant(N, d, D, image_degree, W)
        combined = LinearBound.maximum(upper, lower)
        value = combined.at(hf)

    mode = "example-literal" if example_literal else "formula"
    logger.info(f"常数C({mode}): N={N}, d={d}, D={D}, D'={image_degree} -> "
                f"{mpmath.nstr(combined.hf_coefficient, 15)}·h(f) + {mpmath.nstr(combined.constant, 15)}")
    return ConstantReport(
        N=N, d=d, D=D, hf=hf, mode=mode, image_degree=image_degree,
        tau_D=t_D, tau_image=t_image, e_D=e_D, wustholz_exponent=B, wustholz_bound=W,
        binomial=binomial, upper=upper, lower=lower, combined=combined, value=value,
        precision=bits,
    )
