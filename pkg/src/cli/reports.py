#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
命令行接口模块 - 报告格式

所有报告都是 key=value 文本行，实数统一取 15 位有效数字并附上计算精度，
多项式用可重新解析的语法打印。相同输入得到逐字节相同的输出。
"""

from typing import Iterable, List, Optional, Sequence

import mpmath

from src.algebra.polynomial import Polynomial, format_poly
from src.chow.chow_form import ChowForm
from src.chow.induced_map import InducedMap
from src.chow.restriction import SelfMapRestriction
from src.dynamics.orbit import OrbitReport
from src.dynamics.subvariety import Subvariety
from src.heights.canonical import HeightEstimate
from src.heights.constants import ConstantReport, LinearBound
from src.heights.search import SearchReport
from src.periods.bounds import PeriodBoundReport
from src.periods.exhaustive import ExhaustiveSearchReport
from src.periods.residue import ResiduePeriodReport
from src.resultants.discriminant import DiscriminantComponents
from src.resultants.image import ImageResult


def format_real(value) -> str:
    return mpmath.nstr(mpmath.mpf(value), 15)


def format_value(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if value is None:
        return "none"
    if isinstance(value, mpmath.mpf):
        return format_real(value)
    if isinstance(value, Polynomial):
        return format_poly(value)
    if isinstance(value, (list, tuple)):
        return ",".join(format_value(v) for v in value)
    return str(value)


def kv(**pairs) -> str:
    """同一行内的若干 key=value"""
    return " ".join(f"{key}={format_value(value)}" for key, value in pairs.items())


def render(lines: Iterable[str]) -> str:
    return "\n".join(lines) + "\n"


def variety_lines(X: Subvariety, label: str = "variety") -> List[str]:
    dimension, degree = X.dimension_degree()
    return [
        f"{label}={X}",
        kv(dimension=dimension, degree=degree),
        f"basis={';'.join(format_poly(g) for g in X.canonical_basis())}",
    ]


def image_result_lines(result: ImageResult) -> List[str]:
    return [
        f"variety=V({format_poly(result.form)})",
        kv(path=result.path, pivot=result.pivot, raw_degree=result.raw_degree, power=result.power),
        f"raw={format_poly(result.raw)}",
    ]


def orbit_lines(report: OrbitReport) -> List[str]:
    lines = [kv(step=s.index, degree=s.degree, basis=";".join(s.basis)) for s in report.steps]
    lines.append(kv(tail=report.tail, period=report.period))
    if report.stopped_by_degree_cap:
        lines.append(kv(stopped_by_degree_cap=True))
    return lines


def chow_lines(ch: ChowForm) -> List[str]:
    return [
        kv(kind=ch.kind, N=ch.N, dimension=ch.dimension, degree=ch.degree),
        f"chow_form={format_poly(ch.form)}",
    ]


def induced_map_lines(phi: InducedMap) -> List[str]:
    lines = [
        kv(N=phi.N, t=phi.t, D=phi.D, image_degree=phi.image_degree, degree=phi.degree),
        kv(source_dim=phi.source_dim, target_dim=phi.target_dim),
        f"coefficients={','.join(phi.coefficient_ring.variables)}",
    ]
    lines += [f"coord[{i}]={format_poly(c)}" for i, c in enumerate(phi.coords)]
    return lines


def discriminant_lines(Z: Polynomial, k: int, parts: DiscriminantComponents,
                       restrictions: Sequence[SelfMapRestriction] = ()) -> List[str]:
    lines = [f"Z_{k}={format_poly(Z)}", f"content={parts.content}"]
    lines += [kv(monomial_factor=name, multiplicity=e) for name, e in parts.monomial_factors]
    lines += [kv(linear_factor=g, multiplicity=e) for g, e in parts.linear_factors]
    lines.append(f"remainder={format_poly(parts.remainder)}")
    lines += [f"component={Y}" for Y in parts.components]
    for result in restrictions:
        lines.append(f"psi={','.join(format_poly(c) for c in result.map.coords)}")
        lines.append(kv(self_map=result.variety, steps=result.steps, certificate=result.certificate))
    return lines


def height_lines(variety_height=None, morphism_height=None, precision: Optional[int] = None) -> List[str]:
    lines = []
    if variety_height is not None:
        lines.append(kv(height=variety_height))
    if morphism_height is not None:
        lines.append(kv(morphism_height=morphism_height))
    lines.append(kv(precision=precision))
    return lines


def estimate_lines(estimates: Sequence[HeightEstimate], precision: int) -> List[str]:
    lines = [kv(n=e.iterations, estimate=e.value, error_bound=e.error_bound) for e in estimates]
    last = estimates[-1]
    lines.append(kv(canonical_height=last.value, error_bound=last.error_bound, constant=last.constant))
    lines.append(kv(degrees=last.degrees))
    lines.append(kv(precision=precision))
    return lines


def _bound_line(name: str, bound: LinearBound) -> str:
    return f"{name}={format_real(bound.hf_coefficient)}*hf + {format_real(bound.constant)}"


def constant_lines(report: ConstantReport) -> List[str]:
    return [
        kv(mode=report.mode, N=report.N, d=report.d, D=report.D, hf=report.hf),
        kv(tau_D=report.tau_D, e_D=report.e_D),
        kv(image_degree=report.image_degree, tau_image=report.tau_image),
        kv(wustholz_exponent=report.wustholz_exponent, wustholz_bound=report.wustholz_bound),
        kv(binomial=report.binomial),
        _bound_line("upper", report.upper),
        _bound_line("lower", report.lower),
        _bound_line("C", report.combined),
        kv(value=report.value),
        kv(precision=report.precision),
    ]


def good_reduction_lines(p: int, good: bool, resultant: int) -> List[str]:
    return [kv(p=p, good_reduction=good), kv(resultant=resultant)]


def residue_lines(report: ResiduePeriodReport) -> List[str]:
    lines = [kv(p=report.p, tail=report.tail, period=report.m), kv(degrees=report.degrees)]
    if report.rational_degrees is not None:
        lines.append(kv(rational_degrees=report.rational_degrees, degrees_match=report.degrees_match))
    return lines


def period_bound_lines(report: PeriodBoundReport, precision: int) -> List[str]:
    return [
        kv(p=report.p, v=report.v, q=report.q, M=report.M),
        kv(s=report.s, m=report.m, r=report.r, r_substituted=report.r_substituted),
        kv(e_real=report.e_real, e_floor=report.e_floor, p_power=report.p_power),
        kv(projective_points=report.projective_points, gl_order=report.gl_order),
        kv(bound=report.bound),
        kv(coarse_cap=report.coarse_cap),
        kv(precision=precision),
    ]


def search_lines(report: SearchReport, precision: int) -> List[str]:
    lines = [kv(candidates=report.candidates, found=len(report.found),
                dropped_by_height=report.dropped_by_height, partial=report.partial)]
    for item in report.found:
        lines.append(kv(form=item.form, degree=item.degree, tail=item.tail, period=item.period,
                        estimate=item.estimate, error_bound=item.error_bound))
    lines.append(kv(precision=precision))
    return lines


def exhaustive_lines(report: ExhaustiveSearchReport) -> List[str]:
    return [
        kv(p=report.p, N=report.N, d=report.d, degree_cap=report.degree_cap),
        kv(morphisms=report.morphisms, hyperplanes=report.hyperplanes, partial=report.partial),
        kv(max_period=report.max_period, expected=report.expected, matches=report.matches),
        f"witness_map={report.witness_map or 'none'}",
        f"witness_variety={report.witness_variety or 'none'}",
    ]


def count_lines(q: int, N: int, M: int, t: int, D: int, gl_order: int, points: int,
                chow_count: int, candidates: int) -> List[str]:
    return [
        kv(q=q, N=N, M=M, t=t, D=D),
        kv(gl_order=gl_order, projective_points=points),
        kv(chow_coordinates=chow_count, chow_candidates=candidates),
    ]
