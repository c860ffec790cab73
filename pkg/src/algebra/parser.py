#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
精确代数模块 - 多项式解析

递归下降解析多项式文本。接受的语法：
    poly   := ['+'|'-'] term (('+'|'-') term)*
    term   := factor (('*'|'/') factor)*
    factor := atom ('^' nat)?
    atom   := int | ident | '(' poly ')'
标识符必须是环变量或有理函数域的参数；除法只允许除以非零标量。
"""

import re
from typing import List, NamedTuple

from loguru import logger

from src.algebra.polynomial import Polynomial, PolyRing
from src.utils.exceptions import (
    CoefficientDivisionError,
    PolynomialSyntaxError,
    UnknownIdentifierError,
)

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<ident>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*/^()])|(?P<bad>\S))")


class Token(NamedTuple):
    kind: str
    text: str
    offset: int


def tokenize(text: str) -> List[Token]:
    """把文本切分为记号，记号携带在原文中的偏移"""
    tokens = []
    for match in _TOKEN.finditer(text):
        kind = match.lastgroup
        if kind is None:
            continue
        offset = match.start(kind)
        value = match.group(kind)
        if kind == "bad":
            raise PolynomialSyntaxError(f"位置 {offset} 处出现非法字符 {value!r}", offset)
        tokens.append(Token(kind, value, offset))
    tokens.append(Token("end", "", len(text)))
    return tokens


class PolynomialParser:
    """单个文本的递归下降解析器"""

    def __init__(self, text: str, ring: PolyRing):
        self.text = text
        self.ring = ring
        self.tokens = tokenize(text)
        self.pos = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.pos]

    def _advance(self) -> Token:
        token = self.tokens[self.pos]
        self.pos += 1
        return token

    def _fail(self, token: Token, expected: str):
        found = "输入结束" if token.kind == "end" else repr(token.text)
        raise PolynomialSyntaxError(f"位置 {token.offset} 处语法错误: 期望{expected}，实际为{found}", token.offset)

    def parse(self) -> Polynomial:
        result = self._poly()
        if self.current.kind != "end":
            self._fail(self.current, "运算符或结束")
        return result

    def _poly(self) -> Polynomial:
        negate = False
        if self.current.text in ("+", "-"):
            negate = self._advance().text == "-"
        result = self._term()
        if negate:
            result = -result
        while self.current.text in ("+", "-"):
            op = self._advance().text
            right = self._term()
            result = result + right if op == "+" else result - right
        return result

    def _term(self) -> Polynomial:
        result = self._factor()
        while self.current.text in ("*", "/"):
            op = self._advance()
            divisor_start = self.current
            right = self._factor()
            if op.text == "*":
                result = result * right
                continue
            if not right.is_constant():
                raise CoefficientDivisionError(
                    f"位置 {divisor_start.offset} 处除数含有环变量，只能除以标量", divisor_start.offset)
            value = right.constant_value()
            if not value:
                raise CoefficientDivisionError(f"位置 {divisor_start.offset} 处除数为零", divisor_start.offset)
            domain = self.ring.field.domain
            result = result * domain.quo(domain.one, value)
        return result

    def _factor(self) -> Polynomial:
        base = self._atom()
        if self.current.text == "^":
            self._advance()
            token = self.current
            if token.kind != "int":
                self._fail(token, "非负整数指数")
            self._advance()
            base = base ** int(token.text)
        return base

    def _atom(self) -> Polynomial:
        token = self.current
        if token.kind == "int":
            self._advance()
            return self.ring.constant(int(token.text))
        if token.kind == "ident":
            self._advance()
            return self._identifier(token)
        if token.text == "(":
            self._advance()
            inner = self._poly()
            if self.current.text != ")":
                self._fail(self.current, "')'")
            self._advance()
            return inner
        self._fail(token, "整数、标识符或 '('")

    def _identifier(self, token: Token) -> Polynomial:
        name = token.text
        if name in self.ring.variables:
            return self.ring.gen(name)
        field = self.ring.field
        if name in field.parameters:
            return self.ring.constant(field.parameter(name))
        raise UnknownIdentifierError(f"位置 {token.offset} 处出现未声明的标识符 {name}", token.offset, name)


def parse_poly(text: str, ring: PolyRing) -> Polynomial:
    """把多项式文本解析为环中的多项式

    Args:
        text: 多项式文本
        ring: 目标多项式环

    Returns:
        文本所表示的精确多项式

    Raises:
        PolynomialSyntaxError: 语法错误（携带偏移）
        UnknownIdentifierError: 未声明的标识符
        CoefficientDivisionError: 除以零或除以含变量的多项式
    """
    result = PolynomialParser(text, ring).parse()
    logger.debug(f"解析多项式: {text!r} -> {result.total_degree()} 次, {len(result.rep)} 项")
    return result


def parse_polys(texts, ring: PolyRing) -> List[Polynomial]:
    return [parse_poly(text, ring) for text in texts]
