#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""Gröbner基、消元、Hilbert级数与维数次数"""

import pytest

from src.algebra.fields import ScalarField
from src.algebra.parser import parse_poly, parse_polys
from src.algebra.polynomial import PolyRing
from src.groebner.hilbert import hilbert_numerator, minimalize, series_ring
from src.groebner.ideal import Ideal, dimension_degree, eliminate, ideal_membership, reduced_groebner
from src.groebner.orders import EliminationOrder
from src.utils.exceptions import BudgetExceededError, NotHomogeneousError, UnitIdealError


def _ideal(ring, texts):
    return Ideal(ring, parse_polys(texts, ring))


def test_elimination_order_is_hashable_and_comparable():
    first = EliminationOrder([0], [1, 2])
    assert first == EliminationOrder([0], [1, 2])
    assert hash(first) == hash(EliminationOrder([0], [1, 2]))
    assert first != EliminationOrder([1], [0, 2])
    # 第一块的任何次数都大于第二块
    assert first((1, 0, 0)) > first((0, 5, 5))


def test_elimination_order_reads_weights():
    plain = EliminationOrder([0], [1, 2])
    weighted = EliminationOrder([0], [1, 2], [1, 1, 3])
    assert plain((0, 2, 0)) > plain((0, 0, 1))
    assert weighted((0, 0, 1)) > weighted((0, 2, 0))
    assert plain != weighted


def test_reduced_basis_of_three_planar_points(qq_ring):
    # 平面上三个点 (1:1:1)、(1:ω:ω²)、(1:ω²:ω)
    ideal = _ideal(qq_ring, ["x^2 - y*z", "x*y - z^2", "y^2 - x*z"])
    basis = reduced_groebner(ideal)
    assert len(basis) == 3
    assert all(g.leading_coefficient() == 1 for g in basis)
    assert dimension_degree(ideal) == (0, 3)


def test_twisted_cubic_in_three_space():
    ring = PolyRing(["w", "x", "y", "z"], ScalarField.rationals())
    ideal = _ideal(ring, ["w*y - x^2", "w*z - x*y", "x*z - y^2"])
    assert len(reduced_groebner(ideal)) == 3
    assert dimension_degree(ideal) == (1, 3)
    assert ideal_membership(parse_poly("w*z^2 - y^3", ring), ideal)


def test_budget_is_enforced(qq_ring):
    ideal = _ideal(qq_ring, ["x^2 - y*z", "x*y - z^2", "y^2 - x*z"])
    with pytest.raises(BudgetExceededError):
        ideal.groebner(budget=1)


def test_membership_and_normal_form(qq_ring):
    ideal = _ideal(qq_ring, ["x - y", "y - z"])
    assert ideal_membership(parse_poly("x - z", qq_ring), ideal)
    assert not ideal.contains(parse_poly("x + z", qq_ring))
    assert ideal.normal_form(parse_poly("x", qq_ring)) == parse_poly("z", qq_ring)


def test_ideal_sum_and_equality(qq_ring):
    total = _ideal(qq_ring, ["x"]) + _ideal(qq_ring, ["y"])
    assert total.contains(parse_poly("x + y", qq_ring))
    assert total == _ideal(qq_ring, ["x + y", "x - y"])
    assert _ideal(qq_ring, ["x", "1"]).is_unit()


def test_eliminate_parametrized_cusp():
    ring = PolyRing(["t", "x", "y"], ScalarField.rationals())
    ideal = _ideal(ring, ["x - t^2", "y - t^3"])
    image = eliminate(ideal, ["t"])
    target = PolyRing(["x", "y"], ScalarField.rationals())
    assert image.ring == target
    assert image == Ideal(target, [parse_poly("x^3 - y^2", target)])


def test_hilbert_numerators():
    t = series_ring().gens[0]
    one = series_ring().one
    assert hilbert_numerator([], 3) == one
    assert hilbert_numerator([(1, 1)], 2) == one - t ** 2
    assert hilbert_numerator([(2, 0), (1, 1)], 2) == one - 2 * t ** 2 + t ** 3
    assert minimalize([(2, 0), (1, 0), (1, 1)]) == [(1, 0)]


@pytest.mark.parametrize("texts, expected", [
    (["x"], (1, 1)),
    (["x^2 + y^2 - z^2"], (1, 2)),
    (["x", "y"], (0, 1)),
    (["x*y", "x*z", "y*z"], (0, 3)),
    (["x^3 + y^3 + z^3"], (1, 3)),
])
def test_dimension_and_degree(qq_ring, texts, expected):
    assert dimension_degree(_ideal(qq_ring, texts)) == expected


def test_dimension_degree_preconditions(qq_ring):
    with pytest.raises(NotHomogeneousError):
        dimension_degree(_ideal(qq_ring, ["x + 1"]))
    with pytest.raises(UnitIdealError):
        dimension_degree(_ideal(qq_ring, ["x", "y", "z"]))


def test_groebner_over_prime_field():
    ring = PolyRing(["x", "y", "z"], ScalarField.prime(2))
    ideal = _ideal(ring, ["x^2 + y^2", "x + y"])
    assert [str(g) for g in ideal.groebner()] == ["x + y"]
