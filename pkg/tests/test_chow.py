"""Intersection products and the anticanonical cube."""

from fractions import Fraction
from itertools import product as iproduct

import pytest

from dp1toric.chow import (CycleClass, DegreeMismatch, DegreeOverflow,
                           anticanonical_on_x, derive_h4, evaluate_top,
                           minus_k_cubed, product, triple_on_x, x_class)
from dp1toric.grading import F, H, BundleParams, DivisorClass, torus_divisor_class

Q = Fraction


def test_product_fiber_squared_vanishes():
    assert product([F, F]).coefficients == {}


def test_product_single_factor_is_identity():
    assert product([H]).coefficients == {(1, 0): Q(1)}


def test_product_cross_terms_cancel():
    assert product([H + F, H - F]).coefficients == {(2, 0): Q(1)}


def test_product_rejects_too_many_factors():
    with pytest.raises(DegreeOverflow):
        product([H] * 5)
    with pytest.raises(ValueError):
        product([])


def test_product_symmetric_and_multilinear():
    a = DivisorClass(2, -1)
    b = DivisorClass(Q(1, 2), 3)
    c = DivisorClass(-1, Q(5, 6))
    assert product([a, b, c]) == product([c, a, b]) == product([b, c, a])
    s, t = Q(3), Q(-7, 2)
    lhs = product([s * a + t * b, c])
    assert lhs.coefficient(2, 0) == (s * product([a, c]).coefficient(2, 0)
                                     + t * product([b, c]).coefficient(2, 0))
    assert lhs.coefficient(1, 1) == (s * product([a, c]).coefficient(1, 1)
                                     + t * product([b, c]).coefficient(1, 1))


def test_evaluate_top_reference_values():
    h4 = product([H] * 4)
    assert evaluate_top(BundleParams(0, -2, 0), h4) == Q(1, 6)
    h3f = product([H, H, H, F])
    for p in [BundleParams(0, 0, 0), BundleParams(3, -5, 7), BundleParams(2, 3, 5)]:
        assert evaluate_top(p, h3f) == Q(1, 6)
    assert evaluate_top(BundleParams(1, 1, 1), CycleClass({})) == 0


def test_evaluate_top_degree_mismatch():
    with pytest.raises(DegreeMismatch):
        evaluate_top(BundleParams(0, 0, 0), product([H, H, H]))
    with pytest.raises(DegreeMismatch):
        evaluate_top(BundleParams(0, 0, 0),
                     CycleClass({(1, 0): Q(1), (3, 1): Q(1)}))


def test_derive_h4_examples():
    assert derive_h4(BundleParams(0, -2, 0)) == Q(1, 6)
    assert derive_h4(BundleParams(0, 0, 0)) == 0
    assert derive_h4(BundleParams(2, 3, 6)) == Q(-11, 12)


def test_derive_h4_matches_closed_form_on_grid():
    for lam, mu, nu in iproduct(range(-4, 5), repeat=3):
        p = BundleParams(lam, mu, nu)
        assert derive_h4(p) == -Q(6 * lam + 3 * mu + 2 * nu, 36)


def test_fiber_divisor_product_vanishes():
    # D_x . D_y . D_z . D_w = 0 on every bundle.
    for lam, mu, nu in iproduct(range(-3, 4), repeat=3):
        p = BundleParams(lam, mu, nu)
        cyc = product([torus_divisor_class(p, t) for t in "xyzw"])
        assert evaluate_top(p, cyc) == 0


def test_x_class():
    assert x_class(BundleParams(0, 2, 3)) == DivisorClass(6, 6)
    assert x_class(BundleParams(0, 0, 0)) == DivisorClass(6, 0)
    assert x_class(BundleParams(4, 6, 10)) == DivisorClass(6, 20)


def test_anticanonical_class():
    assert anticanonical_on_x(BundleParams(0, 2, 3)) == DivisorClass(1, 1)
    assert anticanonical_on_x(BundleParams(0, 0, 0)) == DivisorClass(1, 2)
    assert anticanonical_on_x(BundleParams(2, 3, 5)) == DivisorClass(1, 2)


def test_fiber_times_anticanonical_squared_is_one():
    p = BundleParams(1, 1, 3)
    k = anticanonical_on_x(p)
    assert triple_on_x(p, F, k, k) == 1


def test_fiber_squared_triple_vanishes():
    p = BundleParams(2, -1, 4)
    assert triple_on_x(p, F, F, anticanonical_on_x(p)) == 0
    assert triple_on_x(p, F, F, DivisorClass(Q(7, 3), -2)) == 0


def test_anticanonical_cube_reconciled_value():
    # Expansion and closed form agree; the frozen value is 1.
    p = BundleParams(0, -2, 0)
    k = anticanonical_on_x(p)
    assert triple_on_x(p, k, k, k) == 1
    assert minus_k_cubed(p) == 1


def test_minus_k_cubed_examples():
    assert minus_k_cubed(BundleParams(0, 0, 0)) == 6
    assert minus_k_cubed(BundleParams(1, 1, 3)) == Q(3, 2)
    assert minus_k_cubed(BundleParams(0, 1, 2)) == Q(5, 2)


def test_minus_k_cubed_matches_expansion_on_grid():
    for lam, mu, nu in iproduct(range(-4, 5), repeat=3):
        p = BundleParams(lam, mu, nu)
        k = anticanonical_on_x(p)
        assert minus_k_cubed(p) == triple_on_x(p, k, k, k)
