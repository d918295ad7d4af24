from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from supersum.exact import DomainError, ExactValue, parity_case
from supersum.osp import (
    alpha,
    alpha_norm,
    closure_set_a,
    closure_set_b,
    closure_unified,
    conjecture1_scan,
    conjecture2_scan,
    gamma_chain,
    gamma_osp,
    poly_P,
    poly_P_extended,
    poly_Q,
    supertriangles,
    theorem_zero_checks,
    x0_closed,
    x_coeff,
)
from supersum.poly import BiHomPoly
from supersum.reference_forms import closed_form_P, x0_half_table, x0_integral_closed

U = BiHomPoly.linear(1, 0)
spin2 = st.integers(min_value=0, max_value=14)


def test_alpha_and_gamma_first_values():
    assert alpha_norm(1) == 1 and alpha_norm(2) == Fraction(1, 3) and alpha_norm(3) == Fraction(1, 3)
    assert alpha(1) == ExactValue.from_sqrt(2)
    assert alpha(2) == ExactValue.make(Fraction(-1, 3), 6)  # -2/sqrt(6)
    assert gamma_osp(0).is_zero
    assert gamma_osp(1) == BiHomPoly.linear(1, -1)
    assert gamma_osp(2) == BiHomPoly.linear(2, 0)


def test_first_P_values():
    assert poly_P(0, 3, 5) == BiHomPoly.const(1)
    assert poly_P_extended(2, 1, 1).render() == "u - v"
    assert poly_P(1, 2, 3) == BiHomPoly((2,), d0=1)
    assert poly_P(2, 2, 2).render() == "12*u"
    with pytest.raises(DomainError):
        poly_P(4, 2, 6)


def test_x_coefficient_examples():
    for l2 in range(2, 9):
        for k2 in range(2, 9):
            assert x_coeff(1, 2, l2, k2) == -(l2 % 2) * (k2 % 2)
    for l2 in range(4, 9):
        for k2 in range(4, 9):
            assert x_coeff(2, 4, l2, k2) == 0
    assert x_coeff(0, 3, 4, 6) == -4 * 6 * (4 + 6 - 2)


def test_x0_integral_closed_form():
    assert x0_closed(0, 5, 7) == 1
    for l2 in range(2, 10):
        for k2 in range(2, 10):
            assert x0_closed(1, l2, k2) == l2 * k2 * (l2 + k2 - 1)
    # beyond inf(lambda, kappa) the closed form tracks the extended polynomial
    assert x0_closed(2, 2, 2) == poly_P_extended(4, 2, 2).coeff(0) == 4


@settings(max_examples=120, deadline=None)
@given(spin2, spin2, st.integers(0, 6))
def test_engine_matches_closed_forms(l2, k2, w2):
    if w2 > min(l2, k2):
        return
    assert poly_P(w2, l2, k2) == closed_form_P(w2, l2, k2)


def test_printed_third_form_differs_only_when_both_half_integral():
    for l2 in range(6, 15):
        for k2 in range(6, 15):
            same = closed_form_P(6, l2, k2, printed=True) == poly_P(6, l2, k2)
            assert same == (parity_case(l2, k2) != "b")


@settings(max_examples=80, deadline=None)
@given(spin2, spin2, st.integers(0, 3))
def test_half_tables(l2, k2, p):
    if 2 * p + 1 > min(l2, k2):
        return
    assert x_coeff(0, 2 * p + 1, l2, k2) == x0_half_table(p, l2, k2)


@settings(max_examples=80, deadline=None)
@given(spin2, spin2, st.integers(0, 7))
def test_integral_x0(l2, k2, p):
    if 2 * p > min(l2, k2):
        return
    assert x_coeff(0, 2 * p, l2, k2) == x0_integral_closed(p, l2, k2) == x0_closed(p, l2, k2)


@settings(max_examples=80, deadline=None)
@given(spin2, spin2, st.integers(0, 14))
def test_x_recursion_matches_polynomial(l2, k2, w2):
    if w2 > min(l2, k2):
        return
    poly = poly_P(w2, l2, k2)
    for m in range(w2 // 2 + 1):
        assert x_coeff(m, w2, l2, k2) == poly.coeff(m)


@settings(max_examples=80, deadline=None)
@given(spin2, spin2)
def test_P_is_symmetric(l2, k2):
    for w2 in range(min(l2, k2) + 1):
        assert poly_P(w2, l2, k2) == poly_P(w2, k2, l2)


def test_Q_values():
    assert poly_Q(0, 2, 5) == BiHomPoly.const(1)
    assert poly_Q(1, 2, 5).is_zero
    for l2 in range(2, 8):
        for k2 in range(l2, 10):
            assert poly_Q(1, l2, k2) == poly_P(1, l2, k2 - l2 + 1)


def test_closure_examples():
    assert closure_unified(2, 3, 5).render() == "1"
    assert closure_unified(2, 2, 2).render() == "2*sqrt(3)*u"
    for k2 in range(1, 9):
        assert closure_unified(k2, k2, 0).polynomial() == gamma_chain(k2, 1)
    assert closure_unified(2, 2, 3).is_zero       # integral pair, rank k+k'-1/2
    assert closure_unified(2, 3, 2).is_zero       # integral spin below a half-integral one


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 10), st.integers(0, 10), st.data())
def test_unified_closure_agrees_with_rank_sets(l2, k2, data):
    c2 = data.draw(st.integers(abs(l2 - k2), l2 + k2))
    unified = closure_unified(l2, k2, c2)
    assert unified == closure_unified(k2, l2, c2)
    if c2 >= max(l2, k2):
        assert unified == closure_set_a(l2 + k2 - c2, l2, k2)
    lo, hi = min(l2, k2), max(l2, k2)
    if c2 < hi and lo >= 1:
        assert unified == closure_set_b(c2 - hi + lo, lo, hi)
        assert unified == closure_set_b(c2 - hi + lo, lo, hi, use_q=False)


def test_supertriangles():
    assert supertriangles(0, 0, 0) == (ExactValue.rational(1), ExactValue.rational(1))
    nab, tri = supertriangles(1, 1, 2)
    assert nab == ExactValue.from_sqrt(2) and (nab * tri) == ExactValue.rational(1)


def test_theorems_small_range():
    assert theorem_zero_checks("T1", 10).ok
    t2 = theorem_zero_checks("T2", 10, literal=True)
    assert t2.ok and t2.findings
    assert {"args_twice": [2, 1, 2], "closure": "-1/3*sqrt(6)*d0"} in t2.findings


def test_conjecture_scans_small_range():
    assert conjecture1_scan(9, 7).ok
    assert conjecture2_scan(9, 7).ok
