#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""计数、周期界、乘子的阶、剩余域周期与穷举搜索"""

import mpmath
import pytest
from pydantic import ValidationError as SchemaError
from sympy.polys.matrices import DomainMatrix

from src.algebra.fields import ScalarField
from src.algebra.parser import parse_polys
from src.algebra.polynomial import PolyRing
from src.dynamics.morphism import Morphism
from src.dynamics.subvariety import Subvariety
from src.periods.bounds import (
    PeriodBoundInput,
    chow_coordinate_count,
    e_bound,
    general_linear_order,
    group_counts,
    lemma_m_count_bound,
    period_bound,
    projective_point_count,
    veronese_dimension,
)
from src.periods.exhaustive import exhaustive_period_search
from src.periods.multiplier import matrix_order, multiplier_order
from src.periods.residue import residue_period
from src.utils.exceptions import BadReductionError, InvalidPrimeError, PreconditionError


def _variety(ring, *texts):
    return Subvariety(ring, parse_polys(list(texts), ring))


def test_group_and_point_counts():
    assert projective_point_count(2, 1) == 3
    assert projective_point_count(3, 2) == 13
    assert general_linear_order(2, 2) == 6
    assert general_linear_order(3, 3) == 11232
    assert group_counts(2, 1, 1) == (6, 3)
    assert group_counts(4, 0, 2) == (3, 21)
    with pytest.raises(PreconditionError):
        group_counts(6, 1, 1)


def test_chow_candidate_counts():
    assert veronese_dimension(2, 2) == 5
    assert chow_coordinate_count(2, 1, 2) == 6
    assert chow_coordinate_count(3, 2, 1) == 6
    assert lemma_m_count_bound(2, 2, 1, 1) == 7
    assert lemma_m_count_bound(2, 2, 1, 2) == 7 + 63
    with pytest.raises(PreconditionError):
        lemma_m_count_bound(2, 2, 3, 1)


def test_e_bound_for_odd_primes():
    value, floor = e_bound(3, 4)
    assert (value, floor) == (3, 3)
    assert e_bound(5, 1) == (1, 1)
    value, floor = e_bound(3, 3)
    assert floor == 2
    assert mpmath.almosteq(value, 1 + mpmath.log(3, 2))


def test_e_bound_for_two_uses_golden_ratio():
    value, floor = e_bound(2, 2)
    assert floor == 4
    assert abs(value - mpmath.mpf("4.2097")) < mpmath.mpf("0.001")
    # v = 1 给出 log_α(α²) = 2
    assert e_bound(2, 1) == (3, 3)
    with pytest.raises(InvalidPrimeError):
        e_bound(4, 1)
    with pytest.raises(PreconditionError):
        e_bound(3, 0)


def test_period_bound_substitutes_group_order():
    report = period_bound(PeriodBoundInput(p=3, m=2, N=2, D=1))
    assert (report.q, report.M) == (3, 2)
    assert report.r_substituted
    assert report.r == 11232
    assert report.p_power == 3
    assert report.bound == 2 * 11232 * 3
    assert report.coarse_cap == 13 * 11232 * 3


def test_period_bound_with_known_multiplier_order():
    report = period_bound(PeriodBoundInput(p=2, v=2, m=3, r=4, s=2, N=1))
    assert not report.r_substituted
    assert report.p_power == 16
    assert report.bound == 2 * 3 * 4 * 16


def test_period_bound_input_validation():
    with pytest.raises(SchemaError):
        PeriodBoundInput(p=4, m=1, N=1)
    with pytest.raises(SchemaError):
        PeriodBoundInput(p=3, m=0, N=1)


def test_multiplier_order_at_fixed_point():
    ring = PolyRing(["x", "y"], ScalarField.prime(5))
    f = Morphism(parse_polys(["x^2", "y^2"], ring))
    assert multiplier_order(f, [1, 1], 1) == 4
    assert multiplier_order(f, [0, 1], 1) is None
    with pytest.raises(PreconditionError):
        multiplier_order(f, [1, 2], 1)


def test_matrix_order_of_identity():
    ring = PolyRing(["x", "y", "z"], ScalarField.prime(3))
    f = Morphism(parse_polys(["x^3", "y^3", "z^3"], ring))
    # Frobenius 在 F_3 点上是恒等映射，但 Jacobian 为零
    assert multiplier_order(f, [1, 2, 1], 1) is None
    identity = DomainMatrix.eye(2, ring.field.domain)
    assert matrix_order(identity, 3) == 1


def test_residue_period_of_squaring_line(qq_ring, squaring_map):
    report = residue_period(squaring_map, _variety(qq_ring, "x - 2*y"), 3, check_degrees=True)
    assert (report.tail, report.m) == (1, 1)
    assert report.degrees == [1, 1, 1]
    assert report.rational_degrees == [1, 1, 1]
    assert report.degrees_match


def test_residue_period_over_prime_field(f2_ring, example_map):
    report = residue_period(example_map, _variety(f2_ring, "y + z"), 2)
    assert (report.tail, report.m) == (0, 4)
    assert report.rational_degrees is None
    with pytest.raises(PreconditionError):
        residue_period(example_map, _variety(f2_ring, "y + z"), 3)


def test_residue_period_needs_good_reduction(qq_ring):
    f = Morphism(parse_polys(["x^2", "3*y^2", "z^2"], qq_ring))
    with pytest.raises(BadReductionError):
        residue_period(f, _variety(qq_ring, "x"), 3)


def test_exhaustive_search_is_truncated_by_limit():
    report = exhaustive_period_search(2, 1, 1, degree_cap=1, limit=2)
    assert report.partial
    assert report.morphisms == 2
    assert report.hyperplanes == 3


@pytest.mark.slow
def test_exhaustive_search_on_projective_line():
    report = exhaustive_period_search(2, 1, 2, degree_cap=1, expected=3)
    assert not report.partial
    assert report.hyperplanes == 3
    assert report.max_period == 3
    assert report.matches


def test_period_bound_plumbing_values():
    assert general_linear_order(2, 3) == 168
    assert projective_point_count(2, 2) == 7
    report = period_bound(PeriodBoundInput(p=2, v=1, m=4, r=3, s=1, N=1))
    assert report.e_floor == 3
    assert report.bound == 96


def test_residue_periods_respect_candidate_count(qq_ring, squaring_map, f2_ring, example_map):
    report = residue_period(squaring_map, _variety(qq_ring, "x - 2*y"), 3)
    assert report.m <= lemma_m_count_bound(3, 2, 1, max(report.degrees))
    report = residue_period(example_map, _variety(f2_ring, "y + z"), 2)
    assert report.m <= lemma_m_count_bound(2, 2, 1, max(report.degrees))
