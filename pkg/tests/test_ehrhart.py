"""Ehrhart polynomials: interpolation, closed forms, products, facets."""

import random
from fractions import Fraction
from math import comb

import pytest

from ehrhartlab.counting import (
    count_box_scan,
    count_qn_closed,
    dilation_counter,
    oracle_for,
)
from ehrhartlab.ehrhart import (
    EhrhartPolynomial,
    ehrhart_of,
    product_coefficients,
    qn_coefficients,
    qn_first_coefficient,
    qn_growth_check,
    second_coefficient_from_facets,
)
from ehrhartlab.exact import Polynomial
from ehrhartlab.polytopes import (
    crosspolytope,
    cube,
    dilate,
    hull2d,
    pn_family,
    product,
    qn_family,
)

HYBRID7 = (
    Fraction(1),
    Fraction(1534, 105),
    Fraction(3188, 45),
    Fraction(7112, 45),
    Fraction(1756, 9),
    Fraction(7004, 45),
    Fraction(4952, 45),
    Fraction(15656, 315),
)


def ehr(poly):
    return ehrhart_of(poly, dilation_counter(poly))


def test_cube_coefficients_are_binomial_times_power():
    for n in range(1, 7):
        e = ehr(cube(n))
        assert e.coefficients == tuple(
            Fraction(2**i * comb(n, i)) for i in range(n + 1)
        )


def test_hybrid7_polynomial_exact():
    assert ehr(pn_family(7)).coefficients == HYBRID7


def test_diamond_polynomial():
    e = ehr(qn_family(2))
    assert e.coefficients == (Fraction(1), Fraction(2), Fraction(2))


def test_ehrhart_invariant_violations_raise():
    with pytest.raises(ValueError):
        EhrhartPolynomial(3, Polynomial([1, 2, 1]))  # degree 2 != 3
    with pytest.raises(ValueError):
        EhrhartPolynomial(2, Polynomial([2, 2, 1]))  # constant term 2
    with pytest.raises(ValueError):
        EhrhartPolynomial(2, Polynomial([1, 2, -1]))  # negative leading


def test_ehrhart_of_flags_bad_counter():
    with pytest.raises(ValueError):
        # constant counter interpolates to degree 0, not 2
        ehrhart_of(cube(2), lambda k: 9)


def test_closed_coefficients_match_box_scan_interpolation():
    for n in range(2, 7):
        counted = ehrhart_of(
            qn_family(n),
            lambda k, n=n: 1
            if k == 0
            else count_box_scan(oracle_for(dilate(qn_family(n), k))),
        )
        assert qn_coefficients(n).coefficients == counted.coefficients


def test_closed_coefficients_match_closed_count_interpolation():
    for n in range(2, 14):
        interp = ehrhart_of(qn_family(n), lambda k, n=n: count_qn_closed(n, k))
        assert qn_coefficients(n).coefficients == interp.coefficients


def test_reference_bipyramid_values():
    assert qn_coefficients(9).coefficient(1) == Fraction(494, 15)
    assert qn_coefficients(11).coefficient(3) == 1976
    assert qn_coefficients(13).coefficient(5) == Fraction(260832, 5)


def test_bipyramid_volume_is_power_over_dimension():
    for n in range(2, 14):
        assert qn_coefficients(n).volume == Fraction(2**n, n)


def test_first_coefficient_closed_form():
    for n in range(2, 21):
        assert qn_first_coefficient(n) == qn_coefficients(n).coefficient(1)
    assert qn_first_coefficient(6) == 10
    assert qn_first_coefficient(2) == 2
    assert qn_first_coefficient(9) == Fraction(494, 15)


def test_first_coefficient_sign_alternates_in_odd_dimensions():
    assert qn_first_coefficient(11) < 0  # (-1)^5 sign
    assert qn_first_coefficient(9) > 0
    assert qn_first_coefficient(13) > 0


def test_growth_check_range():
    for k in range(2, 8):
        assert qn_growth_check(k)
    with pytest.raises(ValueError):
        qn_growth_check(1)


def test_product_convolution_examples():
    seg = ehr(cube(1))
    assert product_coefficients(seg, seg).coefficients == (
        Fraction(1),
        Fraction(4),
        Fraction(4),
    )


def test_product_convolution_matches_product_count():
    pairs = [
        (cube(2), crosspolytope(2)),
        (qn_family(2), cube(1)),
        (pn_family(3), cube(1)),
    ]
    for a, b in pairs:
        convolved = product_coefficients(ehr(a), ehr(b))
        direct = ehr(product(a, b))
        assert convolved.coefficients == direct.coefficients


def test_counterexample_propagates_to_all_higher_dimensions():
    hybrid = ehr(pn_family(7))
    for m in range(1, 6):
        combined = product_coefficients(hybrid, ehr(cube(m)))
        c1 = combined.coefficient(1)
        assert c1 == Fraction(1534, 105) + 2 * m
        assert c1 > 2 * (7 + m)
        # the violation gap is constant in m
        assert c1 - 2 * (7 + m) == Fraction(1534, 105) - 14


def test_facet_formula_examples():
    assert second_coefficient_from_facets(cube(2)) == 4
    assert second_coefficient_from_facets(crosspolytope(2)) == 2
    triangle = hull2d([(-1, -1), (-1, 2), (2, -1)])
    assert second_coefficient_from_facets(triangle) == Fraction(9, 2)


def test_facet_formula_rejects_higher_dimensions():
    with pytest.raises(ValueError):
        second_coefficient_from_facets(cube(3))


def test_facet_formula_matches_interpolation_on_random_polygons():
    rng = random.Random(42)
    checked = 0
    while checked < 25:
        pts = [
            (rng.randint(-5, 5), rng.randint(-5, 5))
            for _ in range(rng.randint(3, 9))
        ]
        try:
            polygon = hull2d(pts)
        except ValueError:
            continue
        e = ehr(polygon)
        assert second_coefficient_from_facets(polygon) == e.coefficient(1)
        checked += 1


def test_triangle_polynomial_from_box_scan():
    triangle = hull2d([(-1, -1), (-1, 2), (2, -1)])
    e = ehr(triangle)
    assert e.coefficients == (Fraction(1), Fraction(9, 2), Fraction(9, 2))
