import pytest

import oracle
from moonshine import forms
from moonshine.errors import BeyondTruncation, XDependentCoefficient
from moonshine.extremal import (
    ExtremalFamily,
    allowed_count,
    build_family,
    coefficient_poly,
    coefficient_value,
    integer_roots,
    solve_g0,
    specialize,
)
from moonshine.series import IntPoly, LaurentSeries


@pytest.fixture(scope="module")
def families(catalog):
    return {k: build_family(k, 24, catalog) for k in range(1, 6)}


def test_g0_k1(families):
    assert families[1].g0_poly == IntPoly((24, 1))


def test_g0_k2(families):
    assert families[2].g0_poly == IntPoly((393192, -48, -1))


def test_g0_k3(families):
    assert families[3].g0_poly == IntPoly((50319456, -588924, 72, 1))


def test_g0_degree_and_leading(families):
    for k, fam in families.items():
        assert fam.g0_poly.degree == k
        assert fam.g0_poly.leading in (1, -1)


def test_lowest_coefficient_is_one(families):
    for k, fam in families.items():
        assert fam.series.coefficient(-k) == 1
        assert fam.series.min_exp == -k


def test_tachyon_elimination(families):
    for k, fam in families.items():
        for n in range(-(k - 1), 0):
            assert coefficient_poly(fam, n).is_zero, (k, n)


def test_massive_coefficients_independent_of_x(families):
    for k, fam in families.items():
        for n in range(1, 21):
            p = coefficient_poly(fam, n)
            assert p.degree <= 0, (k, n, str(p))


def test_first_massive_coefficients(families):
    assert coefficient_value(families[2], 1) == 42987520
    assert coefficient_value(families[3], 1) == 2592899910


def test_k2_q4_coefficient_against_convolution(families):
    expected = oracle.conv(oracle.J_COEFFS, oracle.J_COEFFS, 2)
    assert expected == 40491909396
    assert coefficient_value(families[2], 2) == expected


def test_symfunc_count_and_values(families):
    assert families[1].symfuncs == ()
    assert families[2].symfuncs == (IntPoly(),)
    assert families[3].symfuncs == (IntPoly(), IntPoly((-590652,)))
    assert len(families[5].symfuncs) == 4


def test_symfunc_consistency(families, catalog):
    # Substituting the solved symmetric functions back into each
    # eliminated coefficient must give the zero polynomial; with e_k
    # included, the k-fold sum reproduces the family identically.
    for k, fam in families.items():
        e = (IntPoly.constant(1),) + fam.symfuncs
        y = IntPoly((24, 1))
        big_e = IntPoly.constant(1)
        for m in range(1, k):
            big_e = e[m] - y * big_e
        e_full = e + (y * big_e,)
        for j in range(1, k):
            acc = IntPoly()
            for m in range(k + 1):
                acc = acc + e_full[m] * catalog.j_power(k - m, 2).coefficient(-j)
            assert acc.is_zero, (k, j)


def test_k1_reproduces_j(families, catalog):
    fam = families[1]
    j = catalog.j_normalized(fam.order)
    for n in range(1, fam.order + 1):
        assert coefficient_value(fam, n) == j.coefficient(n)
    assert fam.g0_poly == IntPoly((24, 1))


def test_brute_product_cross_check_k2(families, catalog):
    # e1 = 0 forces x1 = -48 - x2; expand (J+24+x1)(J+24+x2) directly.
    fam = families[2]
    j = catalog.j_normalized(12)
    for x2 in (0, 7, -31):
        x1 = -48 - x2
        a = j + LaurentSeries.monomial(0, 24 + x1, order=j.order)
        b = j + LaurentSeries.monomial(0, 24 + x2, order=j.order)
        brute = a * b
        assert specialize(fam, x2).agrees_with(brute, up_to=10)


def test_brute_product_cross_check_k3(families, catalog):
    # No integer triple satisfies the solved symmetric functions for
    # k=3 (the quadratic in y1, y2 has irrational roots for every
    # integer y3), so multiply the integer quadratic factor
    # J^2 + (e1 - y3) J + (e2 + y3^2) by (J + y3) instead: same product,
    # different arithmetic route.
    fam = families[3]
    e1, e2 = 0, -590652
    j = catalog.j_normalized(14)
    j2 = catalog.j_power(2, 13)
    for x3 in (0, 7, -24):
        y3 = 24 + x3
        quad = (
            j2
            + j.truncate(13).scale(e1 - y3)
            + LaurentSeries.monomial(0, e2 + y3 * y3, order=13)
        )
        lin = j + LaurentSeries.monomial(0, y3, order=j.order)
        brute = quad * lin
        assert specialize(fam, x3).agrees_with(brute, up_to=10)


def test_specialize_k1_at_minus_24_is_j(families, catalog):
    got = specialize(families[1], -24)
    assert got.agrees_with(catalog.j_normalized(24))
    assert got.coefficient(0) == 0


def test_specialize_constant_term_matches_g0(families):
    fam = families[2]
    for x in (-100, -5, 0, 3, 77):
        assert specialize(fam, x).coefficient(0) == fam.g0_poly(x)
    assert specialize(fam, 0).coefficient(0) == 393192


def test_allowed_counts(families):
    assert allowed_count(families[1]) == 196885
    assert allowed_count(families[2]) == 42987521
    assert allowed_count(families[3]) == 2592899911


def test_allowed_count_rejects_x_dependence():
    doctored = ExtremalFamily(
        k=1,
        order=2,
        series=LaurentSeries({-1: IntPoly((1,)), 1: IntPoly((0, 1))}, 2),
        g0_poly=IntPoly((24, 1)),
        symfuncs=(),
    )
    with pytest.raises(XDependentCoefficient):
        allowed_count(doctored)


def test_solve_g0_examples(families):
    assert solve_g0(families[1], 0) == [-24]
    assert solve_g0(families[1], 196884) == [196860]
    assert solve_g0(families[2], 393192) == [0, -48]
    # x^2 + 48x - 393192 has no integer roots.
    assert solve_g0(families[2], 0) == []


def test_integer_roots_handmade():
    x = IntPoly.gen()
    assert integer_roots((x - 3) * (x + 5) * x) == [0, 3, -5]
    assert integer_roots(x * x + 1) == []
    assert integer_roots(IntPoly((6,))) == []
    with pytest.raises(ValueError):
        integer_roots(IntPoly())


def test_coefficient_poly_bounds(families):
    fam = families[2]
    assert coefficient_poly(fam, -5).is_zero
    with pytest.raises(BeyondTruncation):
        coefficient_poly(fam, fam.order + 1)


def test_build_family_validates_arguments():
    with pytest.raises(ValueError):
        build_family(0, 5)
    with pytest.raises(ValueError):
        build_family(7, 5)
    with pytest.raises(ValueError):
        build_family(2, 0)


def test_k6_builds():
    fam = build_family(6, 8)
    assert fam.g0_poly.degree == 6
    for n in range(-5, 0):
        assert coefficient_poly(fam, n).is_zero
