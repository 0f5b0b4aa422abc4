import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from macpresym.laurent import (LaurentPoly, TermCapExceeded, apply_si, apply_tau, bar,
                               constant_term, evaluate_monomial_spec, leading_under_order,
                               poly_from_json, poly_to_json, term_cap)
from macpresym.qtfield import ONE, Q, T

z = lambda n, i: LaurentPoly.variable(n, i)
m = LaurentPoly.monomial


def test_products():
    assert z(2, 1) * z(2, 2) == m((1, 1))
    assert (z(2, 1) - z(2, 2).scale(T ** -1)) * LaurentPoly.zero(2) == LaurentPoly.zero(2)
    w = (LaurentPoly.one(2) - m((1, -1))) * (LaurentPoly.one(2) - m((-1, 1), Q))
    assert w == LaurentPoly(2, {(0, 0): ONE + Q, (1, -1): -1, (-1, 1): -Q})
    assert constant_term(w) == ONE + Q


def test_swaps_and_shifts():
    assert apply_si(m((2, 1)), 1) == m((1, 2))
    assert apply_si(z(2, 1) + z(2, 2), 1) == z(2, 1) + z(2, 2)
    assert apply_si(m((1, -1, 0)), 2) == m((1, 0, -1))
    assert apply_tau(m((2, 0)), 1) == m((2, 0), Q ** 2)
    assert apply_tau(z(2, 2), 1) == z(2, 2)
    assert apply_tau(m((1, -1)), 2) == m((1, -1), Q ** -1)


def test_bar():
    assert bar(LaurentPoly.one(2)) == LaurentPoly.one(2)
    assert bar(z(1, 1)) == m((-1,))
    assert bar(m((1, -1), T)) == m((-1, 1), T ** -1)


def test_constant_term_and_coefficient():
    f = LaurentPoly.constant(2, 3) + m((1, -1))
    assert constant_term(f) == 3
    assert m((2, 1)).coefficient((2, 1)) == ONE


def test_leading_under_order():
    assert leading_under_order(z(2, 1) + z(2, 2).scale(Q)) == (1, 0)
    assert leading_under_order(LaurentPoly.one(3)) == (0, 0, 0)
    assert leading_under_order(m((1, 1)) + m((2, 0))) == (2, 0)
    with pytest.raises(ValueError):
        leading_under_order(LaurentPoly.zero(2))


def test_evaluation():
    assert evaluate_monomial_spec(m((1, 1)), [T, ONE]) == T
    assert evaluate_monomial_spec(z(2, 1) - z(2, 2).scale(T ** -1), [T, ONE]) == T - T ** -1


def test_json_round_trip():
    f = m((1, -2), Q / (ONE - T)) + LaurentPoly.constant(2, T)
    assert poly_from_json(poly_to_json(f)) == f


def test_term_cap():
    f = sum((z(3, i) for i in (1, 2, 3)), LaurentPoly.zero(3))
    token = term_cap.set(5)
    try:
        with pytest.raises(TermCapExceeded):
            f * f * f
    finally:
        term_cap.reset(token)


exps = st.tuples(st.integers(-2, 2), st.integers(-2, 2), st.integers(-2, 2))
coeffs = st.sampled_from([ONE, -ONE, Q, T, Q * T ** -1, ONE + Q])
polys = st.dictionaries(exps, coeffs, max_size=4).map(lambda d: LaurentPoly(3, d))


@settings(max_examples=50, deadline=None)
@given(polys, polys, polys)
def test_ring_laws(f, g, h):
    assert f * g == g * f
    assert f * (g + h) == f * g + f * h
    assert (f - g) + g == f


@settings(max_examples=50, deadline=None)
@given(polys, polys)
def test_bar_and_swap_are_multiplicative_involutions(f, g):
    assert bar(bar(f)) == f
    assert bar(f * g) == bar(f) * bar(g)
    assert apply_si(apply_si(f, 1), 1) == f
    assert apply_si(f * g, 2) == apply_si(f, 2) * apply_si(g, 2)
