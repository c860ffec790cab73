#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
核心处理模块 - 任务处理器

把校验过的任务文件与命令行参数交给各计算模块，返回各自的结果对象，
由命令行层负责序列化。
"""

import functools
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple, Union

import mpmath
from loguru import logger
from pydantic import ValidationError as SchemaError

from src.algebra.polynomial import Polynomial
from src.chow.chow_form import ChowForm, chow_form
from src.chow.induced_map import InducedMap, generic_image, induced_chow_map
from src.chow.restriction import SelfMapRestriction, restrict_to_component, self_map_restriction
from src.cli.jobs import JobFile
from src.dynamics.images import forward_image, preimage
from src.dynamics.morphism import Morphism
from src.dynamics.orbit import OrbitReport, iterate_orbit
from src.dynamics.reduction import good_reduction, integer_resultant, reduce_mod_p
from src.dynamics.subvariety import Subvariety
from src.heights.canonical import HeightEstimate, canonical_height_sequence
from src.heights.constants import ConstantReport, height_constant_C
from src.heights.heights import height_difference_bound, variety_height
from src.heights.search import SearchReport, preperiodic_search
from src.periods.bounds import (
    PeriodBoundInput,
    PeriodBoundReport,
    chow_coordinate_count,
    group_counts,
    lemma_m_count_bound,
    period_bound,
    veronese_dimension,
)
from src.periods.exhaustive import ExhaustiveSearchReport, exhaustive_period_search
from src.periods.residue import ResiduePeriodReport, residue_period
from src.resultants.discriminant import DiscriminantComponents, discriminant_components, discriminant_locus
from src.resultants.image import ImageResult, image_via_resultant
from src.utils.config import AppConfig
from src.utils.exceptions import (
    ComputationError,
    InvalidPrimeError,
    PreconditionError,
    SubdynError,
    ValidationError,
)


def _stage(name: str):
    """已在异常层次中的错误原样抛出，其余包装为 ComputationError"""
    def decorator(method):
        @functools.wraps(method)
        def wrapper(self, *args, **kwargs):
            with logger.contextualize(stage=name):
                logger.info(f"开始{name}")
                try:
                    result = method(self, *args, **kwargs)
                except SubdynError:
                    raise
                except Exception as e:
                    error_msg = f"{name}失败: {str(e)}"
                    logger.error(error_msg)
                    raise ComputationError(error_msg) from e
                logger.success(f"{name}完成")
                return result
        return wrapper
    return decorator


def _pick(value, fallback, default=None):
    if value is not None:
        return value
    if fallback is not None:
        return fallback
    return default


def _scalar(value: Union[int, str]):
    if isinstance(value, int):
        return value
    try:
        return Fraction(value)
    except (ValueError, ZeroDivisionError) as e:
        raise ValidationError(f"无法解析的系数: {value!r}") from e


class JobProcessor:
    """任务处理器，每个子命令对应一个方法"""

    def __init__(self, config: AppConfig):
        """初始化任务处理器

        Args:
            config: 应用配置（预算、精度与线程数）
        """
        self.config = config
        logger.debug(f"初始化任务处理器，配置: {config}")

    @property
    def budget(self) -> int:
        return self.config.groebner_pair_budget

    def _objects(self, job: JobFile, need_morphism: bool = True,
                 need_variety: bool = True) -> Tuple[Optional[Morphism], Optional[Subvariety]]:
        ring = job.ring()
        f = job.build_morphism(ring) if need_morphism else None
        X = job.build_variety(ring) if need_variety else None
        return f, X

    @_stage("正像计算")
    def image(self, job: JobFile, method: str = "groebner") -> Union[Subvariety, ImageResult]:
        f, X = self._objects(job)
        if method == "resultant":
            if not X.is_hypersurface():
                raise PreconditionError(f"结式方法只适用于超曲面: {X}")
            return image_via_resultant(f, X.hypersurface_form())
        if method != "groebner":
            raise ValidationError(f"未知的正像算法: {method}")
        return forward_image(f, X, self.budget)

    @_stage("原像计算")
    def preimage(self, job: JobFile, reduced: Optional[bool] = None) -> Subvariety:
        f, X = self._objects(job)
        return preimage(f, X, reduced=bool(_pick(reduced, job.options.reduced, False)))

    @_stage("轨道迭代")
    def orbit(self, job: JobFile, prime: Optional[int] = None, max_steps: Optional[int] = None,
              degree_cap: Optional[int] = None) -> OrbitReport:
        f, X = self._objects(job)
        prime = _pick(prime, job.options.prime)
        if prime is not None:
            if f.field.is_prime_field:
                if f.field.characteristic != prime:
                    raise PreconditionError(f"任务已在 {f.field.label()} 上，与 --prime {prime} 不一致")
            else:
                f, X = reduce_mod_p(f, prime), reduce_mod_p(X, prime)
        return iterate_orbit(f, X, max_steps=_pick(max_steps, job.options.max_steps, self.config.orbit_max_steps),
                             degree_cap=_pick(degree_cap, job.options.degree_cap), budget=self.budget)

    @_stage("Chow形式计算")
    def chow(self, job: JobFile) -> ChowForm:
        _, X = self._objects(job, need_morphism=False)
        return chow_form(X, self.budget)

    @_stage("诱导映射计算")
    def induced_map(self, job: JobFile, D: Optional[int] = None, t: Optional[int] = None) -> InducedMap:
        f, _ = self._objects(job, need_variety=False)
        return induced_chow_map(f, _pick(D, job.options.D, 1), _pick(t, job.options.t, 1), self.budget)

    @_stage("判别轨迹计算")
    def discriminant(self, job: JobFile, D: Optional[int] = None, k: Optional[int] = None,
                     point: Optional[Sequence] = None
                     ) -> Tuple[Polynomial, int, DiscriminantComponents, List[SelfMapRestriction]]:
        """判别轨迹 Z_k 及其线性分量；给出系数向量时在包含它的分量上求自映射"""
        f, _ = self._objects(job, need_variety=False)
        D = _pick(D, job.options.D, 1)
        k = _pick(k, job.options.k, 1)
        form, _ = generic_image(f, D, self.budget)
        Z = discriminant_locus(form, k, f.d)
        parts = discriminant_components(Z)

        restrictions = []
        point = _pick(point, job.options.point)
        if point is not None:
            coeffs = [_scalar(c) for c in point]
            for Y in parts.components:
                if not Y.contains_point(coeffs):
                    continue
                psi = restrict_to_component(f, D, Y, self.budget)
                restrictions.append(self_map_restriction(psi, Y, coeffs, self.budget))
        return Z, k, parts, restrictions

    @_stage("高度计算")
    def height(self, job: JobFile) -> Tuple[Optional[mpmath.mpf], Optional[mpmath.mpf]]:
        """子簇的高度与态射的高度（任务中给出哪个就算哪个）"""
        if job.variety is None and job.morphism is None:
            raise ValidationError("任务文件至少需要 morphism 或 variety")
        f, X = self._objects(job, need_morphism=job.morphism is not None,
                             need_variety=job.variety is not None)
        with mpmath.workprec(self.config.real_precision_bits):
            h_X = variety_height(X, self.budget) if X is not None else None
            h_f = f.height if f is not None else None
        return h_X, h_f

    @_stage("典范高度计算")
    def canonical_height(self, job: JobFile, iters: Optional[int] = None) -> List[HeightEstimate]:
        f, X = self._objects(job)
        return canonical_height_sequence(f, X, _pick(iters, job.options.iters, 5), self.budget)

    @_stage("显式常数计算")
    def constants(self, N: int, d: int, D: int, hf, image_degree: Optional[int] = None,
                  example_literal: bool = False) -> ConstantReport:
        return height_constant_C(N, d, D, hf, image_degree=image_degree, example_literal=example_literal)

    @_stage("高度差上界计算")
    def diff_bound(self, C, D: int, d: int, N: int, t: int) -> mpmath.mpf:
        return height_difference_bound(C, D, d, N, t)

    @_stage("好约化判定")
    def good_reduction(self, job: JobFile, prime: Optional[int] = None) -> Tuple[int, bool, int]:
        f, _ = self._objects(job, need_variety=False)
        prime = _pick(prime, job.options.prime)
        if prime is None:
            raise ValidationError("好约化判定需要 --prime")
        return prime, good_reduction(f, prime), integer_resultant(f)

    @_stage("剩余域周期计算")
    def residue_period(self, job: JobFile, prime: Optional[int] = None, max_steps: Optional[int] = None,
                       check_degrees: bool = False) -> ResiduePeriodReport:
        f, X = self._objects(job)
        prime = _pick(prime, job.options.prime, f.field.characteristic or None)
        if prime is None:
            raise ValidationError("剩余域周期需要 --prime")
        return residue_period(f, X, prime, max_steps=_pick(max_steps, job.options.max_steps),
                              check_degrees=check_degrees, budget=self.budget)

    @_stage("周期上界计算")
    def period_bound(self, **values) -> PeriodBoundReport:
        try:
            inp = PeriodBoundInput(**values)
        except SchemaError as e:
            error_msg = f"周期上界的输入不合法: {str(e)}"
            logger.error(error_msg)
            raise InvalidPrimeError(error_msg) from e
        return period_bound(inp)

    @_stage("前周期搜索")
    def search_preperiodic(self, job: JobFile, D_max: Optional[int] = None, coeff_bound: Optional[int] = None,
                           iters: Optional[int] = None, threads: Optional[int] = None) -> SearchReport:
        f, _ = self._objects(job, need_variety=False)
        return preperiodic_search(
            f,
            D_max=_pick(D_max, job.options.D_max, 1),
            coeff_bound=_pick(coeff_bound, job.options.coeff_bound, 1),
            iters=_pick(iters, job.options.iters, 4),
            threads=_pick(threads, None, self.config.threads),
            degree_cap=job.options.degree_cap,
            budget=self.budget,
        )

    @_stage("穷举周期搜索")
    def exhaustive(self, p: int, N: int, d: int, degree_cap: int, max_steps: Optional[int] = None,
                   expected: Optional[int] = None) -> ExhaustiveSearchReport:
        return exhaustive_period_search(p, N, d, degree_cap, threads=self.config.threads,
                                        max_steps=max_steps, expected=expected)

    @_stage("计数")
    def counts(self, q: int, N: int, t: int, D: int, M: Optional[int] = None) -> Tuple[int, ...]:
        """(M, #GL_{M+1}(F_q), #P^N(F_q), Chow 坐标个数, 候选 Chow 形式个数)"""
        if M is None:
            M = veronese_dimension(N, D)
        gl_order, points = group_counts(q, M, N)
        return M, gl_order, points, chow_coordinate_count(N, t, D), lemma_m_count_bound(q, N, t, D)
