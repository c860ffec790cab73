#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
动力学模块 - 子簇

射影空间 P^N 中由齐次多项式生成的闭子簇。规范形式为分次反字典序下的约化
Gröbner 基（每个生成元取本原形式），子簇的相等与哈希都基于规范形式。
"""

import hashlib
import threading
from typing import Iterable, Optional, Sequence, Tuple

from loguru import logger

from src.algebra.polynomial import Polynomial, PolyRing, format_poly, primitive_form
from src.groebner.ideal import Ideal, dimension_degree
from src.utils.exceptions import NotHomogeneousError, RingMismatchError, ZeroPolynomialError


class Subvariety:
    """P^N 中的闭子簇 V(g_1, ..., g_k)

    Attributes:
        ring: 坐标环（N+1 个变量）
        generators: 齐次生成元
    """

    def __init__(self, ring: PolyRing, generators: Iterable[Polynomial]):
        generators = [g for g in generators if not g.is_zero]
        for g in generators:
            if g.ring != ring:
                raise RingMismatchError(f"生成元不在环 {ring} 中: {g}")
            if not g.is_homogeneous():
                error_msg = f"子簇的生成元必须是齐次多项式: {g}"
                logger.error(error_msg)
                raise NotHomogeneousError(error_msg)
        self.ring = ring
        self.generators: Tuple[Polynomial, ...] = tuple(generators)
        self.ideal = Ideal(ring, self.generators)
        self._canonical: Optional[Tuple[Polynomial, ...]] = None
        self._dimension_degree: Optional[Tuple[int, int]] = None
        self._lock = threading.Lock()

    @classmethod
    def hypersurface(cls, g: Polynomial) -> "Subvariety":
        if g.is_zero:
            raise ZeroPolynomialError("超曲面的定义多项式不能为零")
        return cls(g.ring, [g])

    @classmethod
    def point(cls, ring: PolyRing, coords: Sequence) -> "Subvariety":
        """有理点 (c_0 : ... : c_N) 的线性理想"""
        if len(coords) != ring.ngens:
            raise RingMismatchError(f"点的坐标个数 {len(coords)} 与变量个数 {ring.ngens} 不一致")
        values = [ring.field.convert(c) for c in coords]
        pivots = [i for i, c in enumerate(values) if c]
        if not pivots:
            raise ZeroPolynomialError("射影点的坐标不能全为零")
        k = pivots[0]
        gens = [ring.gen(i) * values[k] - ring.gen(k) * values[i] for i in range(ring.ngens) if i != k]
        return cls(ring, gens)

    @property
    def N(self) -> int:
        return self.ring.ngens - 1

    @property
    def field(self):
        return self.ring.field

    def contains_point(self, point: Sequence) -> bool:
        return all(not g.evaluate(point) for g in self.generators)

    def canonical_basis(self) -> Tuple[Polynomial, ...]:
        """分次反字典序约化 Gröbner 基，生成元取本原形式"""
        if self._canonical is None:
            basis = tuple(primitive_form(self.ring.embed(g)) for g in self.ideal.groebner("grevlex"))
            with self._lock:
                if self._canonical is None:
                    self._canonical = basis
        return self._canonical

    def canonical_text(self) -> str:
        return "; ".join(format_poly(g) for g in self.canonical_basis())

    def canonical_key(self) -> str:
        """规范基打印文本的 sha256 摘要"""
        return hashlib.sha256(self.canonical_text().encode("utf-8")).hexdigest()

    def dimension_degree(self) -> Tuple[int, int]:
        if self._dimension_degree is None:
            result = dimension_degree(self.ideal)
            with self._lock:
                self._dimension_degree = result
        return self._dimension_degree

    @property
    def dimension(self) -> int:
        return self.dimension_degree()[0]

    @property
    def codimension(self) -> int:
        return self.N - self.dimension

    @property
    def degree(self) -> int:
        return self.dimension_degree()[1]

    def is_hypersurface(self) -> bool:
        return len(self.canonical_basis()) == 1 and self.canonical_basis()[0].total_degree() > 0

    def hypersurface_form(self) -> Polynomial:
        """超曲面的定义形式（规范化后的唯一生成元）"""
        if not self.is_hypersurface():
            raise RingMismatchError(f"子簇不是超曲面: {self}")
        return self.canonical_basis()[0]

    def __eq__(self, other):
        if not isinstance(other, Subvariety):
            return NotImplemented
        return self.ring == other.ring and self.canonical_basis() == other.canonical_basis()

    def __hash__(self):
        return hash((self.ring, self.canonical_key()))

    def __str__(self):
        return f"V({', '.join(format_poly(g) for g in self.canonical_basis())})"

    def __repr__(self):
        return f"Subvariety({self}, {self.ring.field.label()})"
