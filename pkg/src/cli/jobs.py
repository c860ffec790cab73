#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
命令行接口模块 - 任务文件

任务文件是一个 JSON 文档：射影空间维数、系数域、变量名、态射坐标与子簇生成元
（均为多项式文本）以及各子命令的附加选项。任何计算之前先按模式校验。
"""

import json
import re
from pathlib import Path
from typing import Any, Dict, List, Literal, Optional, Union

from loguru import logger
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator
from pydantic import ValidationError as SchemaError
from sympy import isprime

from src.algebra.fields import ScalarField
from src.algebra.parser import parse_poly
from src.algebra.polynomial import Polynomial, PolyRing
from src.dynamics.morphism import Morphism
from src.dynamics.subvariety import Subvariety
from src.utils.exceptions import ParseError, ValidationError

IDENTIFIER = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")


def _check_names(names: List[str], key: str) -> List[str]:
    for i, name in enumerate(names):
        if not IDENTIFIER.fullmatch(name):
            raise ValueError(f"{key}[{i}] 不是合法的标识符: {name!r}")
    return names


class FieldSpec(BaseModel):
    """系数域: {"kind": "rationals"}、{"kind": "prime", "p": 2} 或带参数的有理函数域"""
    model_config = ConfigDict(extra="forbid")

    kind: Literal["rationals", "prime", "parameters"]
    p: Optional[int] = None
    parameters: List[str] = Field(default_factory=list)
    base: Optional["FieldSpec"] = None

    @field_validator("parameters")
    @classmethod
    def _parameter_names(cls, value: List[str]) -> List[str]:
        if len(set(value)) != len(value):
            raise ValueError("parameters 中有重复的参数名")
        return _check_names(value, "parameters")

    @model_validator(mode="after")
    def _consistent(self) -> "FieldSpec":
        if self.kind == "prime":
            if self.p is None or self.p < 2 or not isprime(self.p):
                raise ValueError(f"prime 域需要素数 p，收到 {self.p}")
        elif self.p is not None:
            raise ValueError("只有 prime 域可以给出 p")
        if self.kind == "parameters":
            if not self.parameters:
                raise ValueError("parameters 域至少需要一个参数名")
            if self.base is not None and self.base.kind == "parameters":
                raise ValueError("不支持嵌套的参数域")
        elif self.parameters or self.base is not None:
            raise ValueError("只有 parameters 域可以给出 parameters 与 base")
        return self

    def build(self) -> ScalarField:
        if self.kind == "rationals":
            return ScalarField.rationals()
        if self.kind == "prime":
            return ScalarField.prime(self.p)
        base = self.base.build() if self.base is not None else ScalarField.rationals()
        return ScalarField.function_field(base, self.parameters)


class JobOptions(BaseModel):
    """子命令的附加选项（命令行参数优先）"""
    model_config = ConfigDict(extra="forbid")

    D: Optional[int] = Field(default=None, ge=1)
    t: Optional[int] = Field(default=None, ge=1)
    k: Optional[int] = Field(default=None, ge=1)
    D_max: Optional[int] = Field(default=None, ge=1)
    coeff_bound: Optional[int] = Field(default=None, ge=0)
    iters: Optional[int] = Field(default=None, ge=0)
    prime: Optional[int] = Field(default=None, ge=2)
    max_steps: Optional[int] = Field(default=None, ge=1)
    degree_cap: Optional[int] = Field(default=None, ge=1)
    point: Optional[List[Union[int, str]]] = None
    reduced: Optional[bool] = None


class JobFile(BaseModel):
    """任务文件模式"""
    model_config = ConfigDict(extra="forbid")

    N: int = Field(..., ge=1, description="射影空间维数")
    field: FieldSpec = Field(default_factory=lambda: FieldSpec(kind="rationals"))
    variables: Optional[List[str]] = Field(default=None, description="变量名，默认 x0..xN")
    morphism: Optional[List[str]] = Field(default=None, description="态射的 N+1 个坐标")
    variety: Optional[List[str]] = Field(default=None, description="子簇的生成元")
    options: JobOptions = Field(default_factory=JobOptions)

    @field_validator("variables")
    @classmethod
    def _variable_names(cls, value: Optional[List[str]]) -> Optional[List[str]]:
        return _check_names(value, "variables") if value is not None else value

    @field_validator("variety")
    @classmethod
    def _non_empty(cls, value: Optional[List[str]]) -> Optional[List[str]]:
        if value is not None and not value:
            raise ValueError("variety 至少需要一个生成元")
        return value

    @model_validator(mode="after")
    def _lengths(self) -> "JobFile":
        if self.variables is None:
            self.variables = [f"x{i}" for i in range(self.N + 1)]
        if len(self.variables) != self.N + 1:
            raise ValueError(f"variables 的长度必须为 N+1 = {self.N + 1}")
        if len(set(self.variables)) != len(self.variables):
            raise ValueError("variables 中有重复的变量名")
        clash = set(self.variables) & set(self.field.parameters)
        if clash:
            raise ValueError(f"variables 与 field.parameters 重名: {sorted(clash)}")
        if self.morphism is not None and len(self.morphism) != self.N + 1:
            raise ValueError(f"morphism 必须恰有 N+1 = {self.N + 1} 个坐标")
        return self

    def ring(self) -> PolyRing:
        return PolyRing(self.variables, self.field.build(), "grevlex")

    def build_morphism(self, ring: Optional[PolyRing] = None) -> Morphism:
        if self.morphism is None:
            raise ValidationError("任务文件缺少 morphism")
        ring = ring or self.ring()
        coords = _parse_entries(self.morphism, ring, "morphism")
        degrees = {c.total_degree() for c in coords if not c.is_zero}
        if len(degrees) > 1:
            raise ValidationError(f"morphism 的坐标次数不一致: {sorted(degrees)}")
        return Morphism(coords)

    def build_variety(self, ring: Optional[PolyRing] = None) -> Subvariety:
        if self.variety is None:
            raise ValidationError("任务文件缺少 variety")
        ring = ring or self.ring()
        return Subvariety(ring, _parse_entries(self.variety, ring, "variety"))


def _parse_entries(texts: List[str], ring: PolyRing, key: str) -> List[Polynomial]:
    """逐项解析多项式文本，错误信息带上所在的键与下标

    Raises:
        ValidationError: 解析失败或不是齐次多项式
    """
    polys = []
    for i, text in enumerate(texts):
        try:
            poly = parse_poly(text, ring)
        except ParseError as e:
            raise ValidationError(f"{key}[{i}]: {str(e)}") from e
        if not poly.is_zero and not poly.is_homogeneous():
            raise ValidationError(f"{key}[{i}] 不是齐次多项式: {text}")
        polys.append(poly)
    return polys


def _describe(error: SchemaError) -> str:
    parts = []
    for item in error.errors():
        location = ".".join(str(x) for x in item["loc"]) or "<root>"
        parts.append(f"{location}: {item['msg']}")
    return "; ".join(parts)


def parse_job(data: Dict[str, Any]) -> JobFile:
    """按模式校验已解析的任务数据

    Raises:
        ValidationError: 不符合模式
    """
    try:
        return JobFile.model_validate(data)
    except SchemaError as e:
        error_msg = f"任务文件不符合模式: {_describe(e)}"
        logger.error(error_msg)
        raise ValidationError(error_msg) from e


def load_job(path: Union[str, Path]) -> JobFile:
    """读取并校验任务文件

    Raises:
        ValidationError: 文件不存在、不是合法 JSON 或不符合模式
    """
    path = Path(path)
    if not path.exists():
        error_msg = f"任务文件不存在: {path}"
        logger.error(error_msg)
        raise ValidationError(error_msg)
    try:
        with open(path, "r", encoding="utf-8") as f:
            data = json.load(f)
    except json.JSONDecodeError as e:
        error_msg = f"任务文件不是合法的JSON: {str(e)}"
        logger.error(error_msg)
        raise ValidationError(error_msg) from e
    if not isinstance(data, dict):
        raise ValidationError("任务文件的顶层必须是 JSON 对象")
    return parse_job(data)
