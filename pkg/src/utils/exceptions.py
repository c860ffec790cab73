#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
工具类模块 - 异常定义

定义计算过程中可能出现的各种异常类型，并给出命令行退出码的统一映射。
"""


class SubdynError(Exception):
    """子簇动力学工具基础异常类"""

    exit_code = 3


class ConfigurationError(SubdynError):
    """配置错误"""

    exit_code = 2


class ValidationError(SubdynError):
    """数据验证错误，如任务文件不符合模式"""

    exit_code = 2


class ParseError(SubdynError):
    """多项式文本解析错误"""

    exit_code = 2


class PolynomialSyntaxError(ParseError):
    """语法错误，携带出错位置"""

    def __init__(self, message, offset=None):
        super().__init__(message)
        self.offset = offset


class UnknownIdentifierError(ParseError):
    """未声明的变量或参数名"""

    def __init__(self, message, offset=None, name=None):
        super().__init__(message)
        self.offset = offset
        self.name = name


class CoefficientDivisionError(ParseError):
    """系数除法错误（除以零或除以含变量的多项式）"""

    def __init__(self, message, offset=None):
        super().__init__(message)
        self.offset = offset


class PreconditionError(SubdynError):
    """数学前提条件不满足"""

    exit_code = 3


class NotHomogeneousError(PreconditionError):
    """多项式或理想不是齐次的"""
    pass


class ZeroPolynomialError(PreconditionError):
    """零多项式（次数或高度无定义）"""
    pass


class RingMismatchError(PreconditionError):
    """多项式环、变量个数或系数域不匹配"""
    pass


class NotAMorphismError(PreconditionError):
    """坐标多项式存在公共零点，不是态射"""
    pass


class BadReductionError(PreconditionError):
    """模p约化失败（生成元约化为零或态射退化）"""
    pass


class InvalidPrimeError(PreconditionError):
    """给定的p不是素数（或q不是素数幂）"""
    pass


class UnitIdealError(PreconditionError):
    """理想为单位理想，对应空簇"""
    pass


class DegenerateImageError(PreconditionError):
    """像的次数退化"""
    pass


class ZeroPartialError(PreconditionError):
    """偏导数为零，求导阶数过高"""
    pass


class UnsupportedCaseError(PreconditionError):
    """当前实现不支持的情形"""
    pass


class ComputationError(SubdynError):
    """精确计算无法完成"""

    exit_code = 3


class DegenerateResultantError(ComputationError):
    """多次坐标变换后结式仍然退化"""
    pass


class SelfMapError(ComputationError):
    """自映射限制过程失败"""
    pass


class BudgetExceededError(SubdynError):
    """超出资源预算（S对数量、枚举规模或轨道步数）"""

    exit_code = 4

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial
