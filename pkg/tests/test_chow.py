#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""Chow形式、诱导映射、分量上的自映射与Bézout界"""

import pytest

from src.algebra.fields import ScalarField
from src.algebra.parser import parse_polys
from src.algebra.polynomial import PolyRing
from src.chow.bezout import bezout_degree_bound
from src.chow.chow_form import chow_form, chow_form_of_cycle, plucker_names
from src.chow.induced_map import induced_chow_map, tau
from src.chow.restriction import is_self_map, restrict_to_component, self_map_restriction
from src.dynamics.subvariety import Subvariety
from src.resultants.discriminant import parameter_ring
from src.utils.exceptions import PreconditionError, UnsupportedCaseError


def _variety(ring, *texts):
    return Subvariety(ring, parse_polys(list(texts), ring))


@pytest.fixture
def coefficient_ring() -> PolyRing:
    field = ScalarField.function_field(ScalarField.rationals(), ["a0", "a1", "a2"])
    return parameter_ring(field)


def test_tau_counts_coefficients():
    assert tau(2, 1) == 3
    assert tau(2, 2) == 6
    assert tau(3, 2) == 10


def test_chow_form_of_hypersurface(qq_ring):
    ch = chow_form(_variety(qq_ring, "x^2 + y^2 - z^2"))
    assert ch.kind == "hypersurface"
    assert str(ch.form) == "u0^2 + u1^2 - u2^2"
    assert (ch.dimension, ch.degree) == (1, 2)


def test_chow_form_of_rational_point(qq_ring):
    ch = chow_form(Subvariety.point(qq_ring, [1, 2, 3]))
    assert ch.kind == "point"
    assert str(ch.form) == "u0 + 2*u1 + 3*u2"


def test_chow_form_of_line_in_three_space():
    ring = PolyRing(["x0", "x1", "x2", "x3"], ScalarField.rationals())
    ch = chow_form(_variety(ring, "x2", "x3"))
    assert ch.kind == "plucker"
    assert str(ch.form) == "p_01"
    assert (ch.dimension, ch.degree) == (1, 1)


def test_plucker_names_are_lexicographic():
    assert plucker_names(3, 1) == ["p_01", "p_02", "p_03", "p_12", "p_13", "p_23"]
    assert plucker_names(10, 0)[:2] == ["p_0", "p_1"]


def test_chow_form_of_cycle_multiplies_components(qq_ring):
    ch = chow_form_of_cycle([(_variety(qq_ring, "x"), 2), (_variety(qq_ring, "y"), 1)])
    assert str(ch.form) == "u0^2*u1"
    assert ch.degree == 3
    with pytest.raises(PreconditionError):
        chow_form_of_cycle([(_variety(qq_ring, "x"), 0)])
    with pytest.raises(PreconditionError):
        chow_form_of_cycle([])


def test_induced_map_of_conic_family(conic_map):
    phi = induced_chow_map(conic_map, 1)
    assert (phi.image_degree, phi.degree) == (2, 4)
    assert (phi.source_dim, phi.target_dim) == (2, 5)
    assert not phi.is_square
    assert [str(c) for c in phi.coords] == [
        "a0^4",
        "-2*a0^2*a1^2",
        "a1^4",
        "2*a0^2*a1^2 - 2*a0^2*a2^2",
        "-2*a1^4 - 2*a1^2*a2^2",
        "a1^4 + 2*a1^2*a2^2 + a2^4",
    ]
    assert phi.specialize([1, 0, 0]) == [1, 0, 0, 0, 0, 0]


def test_induced_map_on_points(squaring_map):
    phi = induced_chow_map(squaring_map, 1, t=2)
    assert [str(c) for c in phi.coords] == ["a0^2", "a1^2", "a2^2"]
    assert phi.is_square
    assert phi.as_morphism().d == 2
    with pytest.raises(UnsupportedCaseError):
        induced_chow_map(squaring_map, 2, t=2)


def test_restriction_to_degenerate_component(conic_map, coefficient_ring):
    Y = _variety(coefficient_ring, "a0")
    psi = restrict_to_component(conic_map, 1, Y)
    assert [str(c) for c in psi.coords] == ["0", "a1^2", "-a1^2 - a2^2"]
    assert is_self_map(psi, Y)
    result = self_map_restriction(psi, Y, [0, 0, 1])
    assert result.certificate
    assert result.steps == 0
    assert result.variety == Y


def test_restriction_through_induced_map(conic_map, coefficient_ring):
    phi = induced_chow_map(conic_map, 1)
    Y = _variety(coefficient_ring, "a1")
    result = self_map_restriction(phi, Y, [1, 0, 0])
    assert [str(c) for c in result.map.coords] == ["a0^2", "0", "-a2^2"]
    assert result.steps == 0


def test_self_map_needs_point_on_component(conic_map, coefficient_ring):
    Y = _variety(coefficient_ring, "a0")
    psi = restrict_to_component(conic_map, 1, Y)
    with pytest.raises(PreconditionError):
        self_map_restriction(psi, Y, [1, 0, 0])


def test_bezout_degree_bound():
    assert bezout_degree_bound(M=2, D=1, d=2, m=1, t=1, N=2, j=0) == 9
    assert bezout_degree_bound(M=2, D=1, d=2, m=1, t=1, N=2, j=2) == 162
    with pytest.raises(PreconditionError):
        bezout_degree_bound(M=0, D=1, d=2, m=1, t=1, N=2, j=0)
    with pytest.raises(PreconditionError):
        bezout_degree_bound(M=2, D=1, d=2, m=1, t=1, N=2, j=-1)
