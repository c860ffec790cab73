#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""精确代数：标量域、多项式运算、打印与解析"""

import itertools
from fractions import Fraction

import mpmath
import pytest

from src.algebra.fields import ScalarField
from src.algebra.parser import parse_poly
from src.algebra.polynomial import (
    PolyRing,
    compose,
    format_poly,
    format_scalar,
    partial_derivative,
    poly_height,
    primitive_form,
    square_free_part,
    weighted_degree_check,
)
from src.utils.exceptions import (
    CoefficientDivisionError,
    InvalidPrimeError,
    PolynomialSyntaxError,
    RingMismatchError,
    UnknownIdentifierError,
    ZeroPolynomialError,
)


def test_prime_field_rejects_composite():
    with pytest.raises(InvalidPrimeError):
        ScalarField.prime(4)
    with pytest.raises(InvalidPrimeError):
        ScalarField.prime(1)


def test_prime_field_residues_are_non_negative():
    F5 = ScalarField.prime(5)
    assert F5.residue(F5.convert(-1)) == 4
    assert F5.residue(F5.convert(Fraction(1, 2))) == 3


def test_function_field_labels_and_parameters():
    field = ScalarField.function_field(ScalarField.rationals(), ["a0", "a1"])
    assert field.is_function_field
    assert field.label() == "QQ(a0,a1)"
    assert field.base == ScalarField.rationals()
    with pytest.raises(RingMismatchError):
        field.parameter("b")


def test_monomials_of_degree_are_grevlex_descending(qq_ring):
    assert qq_ring.monomials_of_degree(2) == [
        (2, 0, 0), (1, 1, 0), (0, 2, 0), (1, 0, 1), (0, 1, 1), (0, 0, 2)]
    assert len(qq_ring.monomials_of_degree(3)) == 10


def test_ring_rejects_duplicate_and_clashing_names(param_ring):
    with pytest.raises(RingMismatchError):
        PolyRing(["x", "x"], ScalarField.rationals())
    with pytest.raises(RingMismatchError):
        PolyRing(["a0", "y"], param_ring.field)


def test_parse_and_print_over_rationals(qq_ring):
    p = parse_poly("x^2 - 3*x*y + 1/2*z^2", qq_ring)
    assert format_poly(p) == "x^2 - 3*x*y + 1/2*z^2"
    assert p.total_degree() == 2
    assert p.is_homogeneous()


def test_parse_accepts_parentheses_and_scalar_division(qq_ring):
    p = parse_poly("(x + y)^2/2", qq_ring)
    assert format_poly(p) == "1/2*x^2 + x*y + 1/2*y^2"


def test_print_over_prime_field_uses_residues():
    ring = PolyRing(["x", "y"], ScalarField.prime(5))
    assert format_poly(parse_poly("x - y", ring)) == "x + 4*y"
    assert format_poly(parse_poly("5*x", ring)) == "0"


def test_print_over_parameter_field(param_ring):
    p = parse_poly("a0*x + a1*y + a2*z", param_ring)
    assert format_poly(p) == "a0*x + a1*y + a2*z"
    q = parse_poly("(a0 + 1)*x^2 - a1^2*y*z", param_ring)
    assert format_poly(q) == "a0*x^2 + x^2 - a1^2*y*z"


def test_printed_form_reparses_to_equal_polynomial(qq_ring, param_ring, rng):
    for _ in range(20):
        terms = {m: rng.randint(-9, 9) for m in qq_ring.monomials_of_degree(2)}
        p = qq_ring.from_terms({m: Fraction(c, rng.randint(1, 4)) for m, c in terms.items() if c})
        assert parse_poly(format_poly(p), qq_ring) == p
    q = parse_poly("a0^2/(a1 + 1)*x + a2*y", param_ring)
    assert parse_poly(format_poly(q), param_ring) == q


def test_syntax_error_carries_offset(qq_ring):
    with pytest.raises(PolynomialSyntaxError) as info:
        parse_poly("x + * y", qq_ring)
    assert info.value.offset == 4
    with pytest.raises(PolynomialSyntaxError):
        parse_poly("x^y", qq_ring)
    with pytest.raises(PolynomialSyntaxError):
        parse_poly("(x + y", qq_ring)
    with pytest.raises(PolynomialSyntaxError):
        parse_poly("x $ y", qq_ring)


def test_unknown_identifier(qq_ring):
    with pytest.raises(UnknownIdentifierError) as info:
        parse_poly("x + w", qq_ring)
    assert info.value.name == "w"
    assert info.value.offset == 4


def test_division_only_by_nonzero_scalars(qq_ring):
    with pytest.raises(CoefficientDivisionError):
        parse_poly("x/y", qq_ring)
    with pytest.raises(CoefficientDivisionError):
        parse_poly("x/0", qq_ring)
    assert format_poly(parse_poly("x/2", qq_ring)) == "1/2*x"


def test_primitive_form_over_rationals(qq_ring):
    p = parse_poly("1/2*x - 1/3*y", qq_ring)
    assert format_poly(primitive_form(p)) == "3*x - 2*y"
    assert format_poly(primitive_form(parse_poly("-2*x + 4*y", qq_ring))) == "x - 2*y"


def test_primitive_form_over_prime_field_is_monic():
    ring = PolyRing(["x", "y"], ScalarField.prime(5))
    assert format_poly(primitive_form(parse_poly("2*x + y", ring))) == "x + 3*y"


def test_primitive_form_over_parameter_field(param_ring):
    p = parse_poly("-2*a0^2*x/a1 + 4*a1*y", param_ring)
    assert format_poly(primitive_form(p)) == "a0^2*x - 2*a1^2*y"


def test_primitive_form_of_zero_raises(qq_ring):
    with pytest.raises(ZeroPolynomialError):
        primitive_form(qq_ring.zero)


def test_square_free_part_over_rationals(qq_ring):
    p = parse_poly("(x - y)^2*(x + y)", qq_ring)
    assert format_poly(square_free_part(p)) == "x^2 - y^2"


def test_square_free_part_in_positive_characteristic():
    F2 = PolyRing(["x", "y", "z"], ScalarField.prime(2))
    assert format_poly(square_free_part(parse_poly("x^2 + y^2", F2))) == "x + y"
    F3 = PolyRing(["x", "y"], ScalarField.prime(3))
    assert format_poly(square_free_part(parse_poly("x^3 + y^3", F3))) == "x + y"
    assert format_poly(square_free_part(parse_poly("x^2*y", F3))) == "x*y"


def test_square_free_part_over_parameter_field(param_ring):
    p = parse_poly("(a0*x + a1*y)^2", param_ring)
    assert format_poly(square_free_part(p)) == "a0*x + a1*y"


def test_evaluate_and_compose(qq_ring):
    p = parse_poly("x^2 + y", qq_ring)
    assert p.evaluate([2, 3, 0]) == 7
    g = parse_poly("x + y - z", qq_ring)
    coords = [parse_poly(s, qq_ring) for s in ("x^2", "y^2", "z^2")]
    assert format_poly(compose(g, coords)) == "x^2 + y^2 - z^2"


def test_partial_derivatives(qq_ring):
    p = parse_poly("x^3*y + z^4", qq_ring)
    assert format_poly(partial_derivative(p, "x", 2)) == "6*x*y"
    assert partial_derivative(p, "y", 2).is_zero
    F2 = PolyRing(["x", "y"], ScalarField.prime(2))
    assert partial_derivative(parse_poly("x^2 + x*y", F2), "x").rep == parse_poly("y", F2).rep


def test_poly_height_is_scale_invariant(qq_ring):
    p = parse_poly("2*x - 6*y", qq_ring)
    assert mpmath.almosteq(poly_height(p), mpmath.log(3))
    assert mpmath.almosteq(poly_height(p * Fraction(5, 7)), mpmath.log(3))
    with pytest.raises(ZeroPolynomialError):
        poly_height(qq_ring.zero)


def test_format_scalar(param_ring):
    field = param_ring.field
    value = field.parameter("a0") ** 2 - 2
    assert format_scalar(value, field) == "a0^2 - 2"
    assert format_scalar(field.zero, field) == "0"


def test_weighted_degree_check(qq_ring):
    assert weighted_degree_check(parse_poly("x^2 + y*z", qq_ring)) == (True, 2)
    assert weighted_degree_check(parse_poly("x^2 + y", qq_ring)) == (False, None)
    weighted = PolyRing(["x", "y"], ScalarField.rationals(), weights=[1, 2])
    assert weighted_degree_check(parse_poly("x^2 + y", weighted)) == (True, 2)
    with pytest.raises(ZeroPolynomialError):
        weighted_degree_check(qq_ring.zero)
    with pytest.raises(RingMismatchError):
        PolyRing(["x", "y"], ScalarField.rationals(), weights=[1, 0])


def _nonzero(rng, bound=9):
    return rng.choice([-1, 1]) * rng.randint(1, bound)


def _rational_coefficient(field, rng):
    return Fraction(_nonzero(rng), rng.randint(1, 4))


def _prime_coefficient(field, rng):
    return rng.randint(1, field.characteristic - 1)


def _parameter_coefficient(field, rng):
    value = field.parameter(rng.choice(field.parameters)) * field.convert(_nonzero(rng, 3)) \
        + field.convert(rng.randint(0, 3))
    if rng.random() < 0.3:
        value = field.domain.quo(value, field.parameter(rng.choice(field.parameters)) + field.one)
    return value


def _random_poly(ring, rng, coefficient, max_terms=4, max_degree=3):
    monomials = [m for m in itertools.product(range(max_degree + 1), repeat=ring.ngens) if sum(m) <= max_degree]
    terms = {rng.choice(monomials): coefficient(ring.field, rng) for _ in range(rng.randint(1, max_terms))}
    return ring.from_terms(terms)


def _rings_with_coefficients(param_ring):
    return [
        (PolyRing(["x", "y", "z"], ScalarField.rationals()), _rational_coefficient),
        (PolyRing(["x", "y", "z"], ScalarField.prime(2)), _prime_coefficient),
        (PolyRing(["x", "y", "z"], ScalarField.prime(7)), _prime_coefficient),
        (param_ring, _parameter_coefficient),
    ]


def test_ring_axioms(param_ring, rng, full_runs):
    for ring, coefficient in _rings_with_coefficients(param_ring):
        for _ in range(100 if full_runs else 10):
            p, q, r = (_random_poly(ring, rng, coefficient) for _ in range(3))
            assert (p + q) + r == p + (q + r)
            assert (p * q) * r == p * (q * r)
            assert p * (q + r) == p * q + p * r
            assert p * q == q * p
            assert p + q == q + p
            assert p - p == ring.zero
            assert p * ring.one == p


def test_frobenius_identity(rng, full_runs):
    for p in (2, 3, 5):
        ring = PolyRing(["x", "y", "z"], ScalarField.prime(p))
        for _ in range(100 if full_runs else 10):
            a = _random_poly(ring, rng, _prime_coefficient, max_degree=2)
            b = _random_poly(ring, rng, _prime_coefficient, max_degree=2)
            assert (a + b) ** p == a ** p + b ** p


def test_printed_form_reparses_over_every_field(param_ring, rng, full_runs):
    for ring, coefficient in _rings_with_coefficients(param_ring):
        for _ in range(100 if full_runs else 20):
            p = _random_poly(ring, rng, coefficient)
            assert parse_poly(format_poly(p), ring) == p


def test_poly_height_invariant_under_scaling(qq_ring, rng, full_runs):
    for _ in range(100 if full_runs else 20):
        p = _random_poly(qq_ring, rng, _rational_coefficient)
        scale = Fraction(_nonzero(rng), rng.randint(1, 9))
        assert mpmath.almosteq(poly_height(p * scale), poly_height(p))
