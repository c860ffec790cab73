#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""显式常数、子簇高度、典范高度与前周期搜索"""

from fractions import Fraction

import mpmath
import pytest

from src.algebra.fields import ScalarField
from src.algebra.parser import parse_polys
from src.algebra.polynomial import PolyRing
from src.dynamics.images import forward_image
from src.dynamics.subvariety import Subvariety
from src.heights.canonical import canonical_height, canonical_height_sequence, error_bound
from src.heights.constants import LinearBound, e_of_D, height_constant_C
from src.heights.heights import height_difference_bound, variety_height
from src.heights.search import candidate_forms, count_candidates, preperiodic_search
from src.utils.config import get_active_config, set_active_config
from src.utils.exceptions import BudgetExceededError, PreconditionError, UnsupportedCaseError


def _variety(ring, *texts):
    return Subvariety(ring, parse_polys(list(texts), ring))


def test_constants_of_worked_example():
    report = height_constant_C(2, 2, 1, 0)
    assert (report.tau_D, report.e_D) == (6, 22)
    assert report.wustholz_exponent == 45
    assert 174 <= report.wustholz_bound <= 175
    assert report.binomial == 33649  # C(23, 18)
    assert report.mode == "formula"
    assert report.image_degree == 2


def test_upper_bound_for_linear_image():
    report = height_constant_C(2, 2, 1, 0, image_degree=1)
    assert report.upper.hf_coefficient == 2
    assert abs(report.upper.constant - mpmath.mpf("87.5")) < mpmath.mpf("0.2")


def test_example_literal_mode_reproduces_printed_constant():
    report = height_constant_C(2, 2, 1, 0, example_literal=True)
    assert report.mode == "example-literal"
    assert report.binomial == 8008
    assert report.lower.hf_coefficient == 21504
    assert abs(report.lower.constant - 1492241) < 25
    assert report.combined.hf_coefficient == 21504
    assert report.value == report.combined.constant


def test_combined_constant_dominates_both_bounds():
    report = height_constant_C(2, 2, 1, 3)
    for hf in (0, 1, 10):
        assert report.combined.at(hf) >= report.upper.at(hf)
        assert report.combined.at(hf) >= report.lower.at(hf)
    merged = LinearBound.maximum(LinearBound(hf_coefficient=mpmath.mpf(1), constant=mpmath.mpf(5)),
                                 LinearBound(hf_coefficient=mpmath.mpf(3), constant=mpmath.mpf(2)))
    assert (merged.hf_coefficient, merged.constant) == (3, 5)


def test_constant_preconditions():
    assert e_of_D(2, 2, 1) == 22
    with pytest.raises(PreconditionError):
        height_constant_C(2, 1, 1, 0)
    with pytest.raises(PreconditionError):
        height_constant_C(2, 2, 1, -1)


def test_variety_heights(qq_ring):
    assert mpmath.almosteq(variety_height(_variety(qq_ring, "x - 2*y")), mpmath.log(2))
    assert mpmath.almosteq(variety_height(_variety(qq_ring, "3*x - 6*y + 9*z")), mpmath.log(3))
    assert mpmath.almosteq(variety_height(Subvariety.point(qq_ring, [1, 2, 3])), mpmath.log(3))
    with pytest.raises(UnsupportedCaseError):
        variety_height(_variety(PolyRing(["x", "y", "z"], ScalarField.prime(3)), "x"))


def test_variety_height_invariant_under_scaling(qq_ring, rng, full_runs):
    x, y, z = qq_ring.gens
    for _ in range(100 if full_runs else 10):
        a, b, c = rng.randint(-5, 5), rng.randint(-5, 5), rng.randint(1, 5)
        scale = Fraction(rng.choice([-1, 1]) * rng.randint(1, 9), rng.randint(1, 9))
        g = x * a + y * b + z * c
        assert mpmath.almosteq(variety_height(Subvariety.hypersurface(g * scale)),
                               variety_height(Subvariety.hypersurface(g)))
        point = [a, b, c]
        assert mpmath.almosteq(variety_height(Subvariety.point(qq_ring, [scale * t for t in point])),
                               variety_height(Subvariety.point(qq_ring, point)))


def test_height_difference_bound():
    assert height_difference_bound(1, 1, 2, 2, 1) == 1
    assert height_difference_bound(1, 1, 2, 2, 2) == 2
    with pytest.raises(PreconditionError):
        height_difference_bound(1, 1, 2, 2, 3)


def test_error_bound_halves_with_each_iterate():
    first = error_bound(10, 1, 2, 3)
    second = error_bound(10, 1, 2, 4)
    assert mpmath.almosteq(first, 2 * second)
    assert mpmath.almosteq(error_bound(1, 1, 2, 0), 2)


def test_canonical_height_of_squaring_orbit(qq_ring, squaring_map):
    estimates = canonical_height_sequence(squaring_map, _variety(qq_ring, "x - 2*y"), 5)
    assert [e.iterations for e in estimates] == [0, 1, 2, 3, 4, 5]
    for e in estimates:
        assert mpmath.almosteq(e.value, mpmath.log(2))
    assert estimates[-1].degrees == [1] * 6
    assert estimates[-1].error_bound < estimates[0].error_bound


def test_canonical_height_of_fixed_line_vanishes(qq_ring, conic_map):
    estimate = canonical_height(conic_map, _variety(qq_ring, "z"), 6)
    assert estimate.value == 0
    assert estimate.iterations == 6
    assert estimate.degrees == [1] * 7


def _random_lines(rng, count):
    lines = []
    for _ in range(count):
        u, v = rng.sample(["x", "y", "z"], 2)
        lines.append(f"{rng.randint(1, 9)}*{u} - {rng.randint(1, 9)}*{v}")
    return lines


def test_functional_equation_on_random_lines(qq_ring, squaring_map, rng):
    for text in _random_lines(rng, 10):
        X = _variety(qq_ring, text)
        image = forward_image(squaring_map, X)
        later = canonical_height(squaring_map, X, 4)
        current = canonical_height(squaring_map, image, 3)
        scale = squaring_map.d * mpmath.mpf(image.degree) / X.degree
        residual = abs(current.value - scale * later.value)
        assert residual <= current.error_bound + scale * later.error_bound


def test_height_difference_bound_on_random_lines(qq_ring, squaring_map, rng):
    C = height_constant_C(2, 2, 1, squaring_map.height).value
    bound = height_difference_bound(C, 1, 2, 2, 1)
    for text in _random_lines(rng, 10):
        X = _variety(qq_ring, text)
        estimate = canonical_height(squaring_map, X, 4)
        assert abs(estimate.value - variety_height(X)) <= bound


def test_canonical_height_preconditions(qq_ring, squaring_map, example_map, f2_ring):
    with pytest.raises(UnsupportedCaseError):
        canonical_height(example_map, _variety(f2_ring, "y + z"), 2)
    with pytest.raises(UnsupportedCaseError):
        canonical_height(squaring_map, _variety(qq_ring, "x", "y"), 2)
    with pytest.raises(PreconditionError):
        canonical_height(squaring_map, _variety(qq_ring, "x"), -1)


def test_candidate_enumeration(qq_ring):
    assert count_candidates(2, 1, 1) == 27
    forms = [str(g) for g in candidate_forms(qq_ring, 1, 1)]
    assert len(forms) == 13
    assert forms[0] == "z"
    assert "x - y - z" in forms
    assert "-x + y" not in forms


def test_preperiodic_lines_of_squaring_map(squaring_map):
    report = preperiodic_search(squaring_map, D_max=1, coeff_bound=1, iters=2)
    assert report.candidates == 13
    assert not report.partial
    assert report.dropped_by_height == 0
    assert sorted(item.form for item in report.found) == sorted([
        "x", "y", "z", "x - y", "x + y", "x - z", "x + z", "y - z", "y + z"])
    plus = next(item for item in report.found if item.form == "x + y")
    assert (plus.tail, plus.period) == (1, 1)


def test_search_budget_returns_partial_report(squaring_map):
    set_active_config(get_active_config().model_copy(update={"search_candidate_budget": 5}))
    with pytest.raises(BudgetExceededError) as info:
        preperiodic_search(squaring_map, D_max=1, coeff_bound=1, iters=2)
    assert info.value.partial.partial
    assert info.value.partial.candidates <= 5
