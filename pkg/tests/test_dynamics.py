#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""态射、正像与原像、轨道与模p约化"""

import mpmath
import pytest

from src.algebra.fields import ScalarField
from src.algebra.parser import parse_polys
from src.algebra.polynomial import PolyRing
from src.dynamics.images import forward_image, fresh_names, preimage
from src.dynamics.morphism import Morphism
from src.dynamics.orbit import iterate_orbit
from src.dynamics.reduction import good_reduction, integer_resultant, reduce_mod_p
from src.dynamics.subvariety import Subvariety
from src.utils.exceptions import (
    BadReductionError,
    InvalidPrimeError,
    NotAMorphismError,
    NotHomogeneousError,
    PreconditionError,
    RingMismatchError,
)


def _variety(ring, *texts):
    return Subvariety(ring, parse_polys(list(texts), ring))


def test_morphism_rejects_common_zero(qq_ring):
    with pytest.raises(NotAMorphismError):
        Morphism(parse_polys(["x^2", "x*y", "z^2"], qq_ring))


def test_morphism_rejects_mixed_degrees(qq_ring):
    with pytest.raises(NotHomogeneousError):
        Morphism(parse_polys(["x^2", "y", "z^2"], qq_ring))
    with pytest.raises(NotHomogeneousError):
        Morphism(parse_polys(["x^2 + y", "y^2", "z^2"], qq_ring))


def test_morphism_needs_one_coordinate_per_variable(qq_ring):
    with pytest.raises(RingMismatchError):
        Morphism(parse_polys(["x^2", "y^2"], qq_ring))


def test_apply_iterate_and_height(qq_ring, squaring_map):
    assert squaring_map.apply([1, 2, 3]) == (1, 4, 9)
    assert [str(c) for c in squaring_map.iterate(2).coords] == ["x^4", "y^4", "z^4"]
    with pytest.raises(PreconditionError):
        squaring_map.iterate(0)
    f = Morphism(parse_polys(["2*x^2", "4*y^2", "6*z^2"], qq_ring))
    assert mpmath.almosteq(f.height, mpmath.log(3))
    assert mpmath.almosteq(squaring_map.height, 0)


def test_fresh_names_avoid_existing_variables():
    assert fresh_names(["x", "y0"], 2) == ["_y0", "y1"]


def test_image_of_line_under_example_map(f2_ring, example_map):
    image = forward_image(example_map, _variety(f2_ring, "y + z"))
    assert str(image) == "V(y^2 + x*z)"
    assert image.dimension_degree() == (1, 2)


def test_image_of_fixed_line(qq_ring, squaring_map):
    line = _variety(qq_ring, "x - y")
    assert forward_image(squaring_map, line) == line


def test_image_of_generic_line_is_a_conic(qq_ring, squaring_map):
    image = forward_image(squaring_map, _variety(qq_ring, "x + y + z"))
    assert image.dimension_degree() == (1, 2)


def test_image_of_point(qq_ring, squaring_map):
    point = Subvariety.point(qq_ring, [1, 2, 3])
    assert forward_image(squaring_map, point) == Subvariety.point(qq_ring, [1, 4, 9])


def test_preimage_and_its_reduced_form(f2_ring, example_map):
    conic = _variety(f2_ring, "y^2 + x*z")
    full = preimage(example_map, conic)
    assert str(full) == "V(y^4 + z^4)"
    assert full.degree == 4
    assert preimage(example_map, conic, reduced=True) == _variety(f2_ring, "y + z")


def test_image_rejects_foreign_ring(f2_ring, squaring_map):
    with pytest.raises(RingMismatchError):
        forward_image(squaring_map, _variety(f2_ring, "x"))


def test_orbit_of_example_line(f2_ring, example_map):
    report = iterate_orbit(example_map, _variety(f2_ring, "y + z"), max_steps=16)
    assert (report.tail, report.period) == (0, 4)
    assert report.degrees == [1, 2, 1, 2, 1]
    assert report.iterates[2] == _variety(f2_ring, "x + y")
    assert report.iterates[4] == report.iterates[0]


def test_orbit_without_repetition(qq_ring, squaring_map):
    report = iterate_orbit(squaring_map, _variety(qq_ring, "x - 2*y"), max_steps=3)
    assert report.period is None
    assert len(report.steps) == 4
    assert str(report.iterates[3]) == "V(x - 256*y)"


def test_orbit_stops_at_degree_cap(qq_ring, squaring_map):
    report = iterate_orbit(squaring_map, _variety(qq_ring, "x + y + z"), max_steps=5, degree_cap=1)
    assert report.stopped_by_degree_cap
    assert report.period is None
    assert report.degrees == [1, 2]


def test_orbit_needs_positive_step_budget(qq_ring, squaring_map):
    with pytest.raises(PreconditionError):
        iterate_orbit(squaring_map, _variety(qq_ring, "x"), max_steps=0)


def test_good_reduction_on_projective_line():
    ring = PolyRing(["x", "y"], ScalarField.rationals())
    f = Morphism(parse_polys(["x^2", "3*y^2"], ring))
    assert integer_resultant(f) == 9
    assert good_reduction(f, 2)
    assert not good_reduction(f, 3)
    with pytest.raises(InvalidPrimeError):
        good_reduction(f, 4)
    with pytest.raises(BadReductionError):
        reduce_mod_p(f, 3)


def test_reduce_mod_p(qq_ring, conic_map):
    reduced = reduce_mod_p(conic_map, 2)
    assert reduced.field == ScalarField.prime(2)
    assert [str(c) for c in reduced.coords] == ["x^2", "y^2 + z^2", "z^2"]
    X = reduce_mod_p(_variety(qq_ring, "2*x - 4*y + 6*z"), 2)
    assert str(X) == "V(x + z)"
