from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from supersum.exact import DomainError, ExactValue
from supersum.oracles import q_sixj_by_contraction
from supersum.su2 import sixj
from supersum.suq2 import QContext, check_q_sum_rule

q_values = st.sampled_from([Fraction(2), Fraction(3, 2), Fraction(5, 4), Fraction(1, 3), Fraction(7, 2)])


def test_q_numbers():
    c = QContext(2)
    assert c.qnum(2) == Fraction(5, 2)
    assert c.qnum(3) == Fraction(21, 4)
    assert all(QContext(1).qnum(n) == n for n in range(6))


def test_series():
    c = QContext(2)
    assert c.series_F(1) == 1
    assert c.series_F(2) == Fraction(7, 2)
    assert QContext(1).series_F(3) == 6
    assert c.series_Phi(2) == Fraction(2, 3)
    assert c.phi_factorial(1) == 1
    assert all(QContext(1).series_Phi(n) == 1 for n in range(1, 8))


def test_gamma_squared():
    assert QContext(Fraction(3, 2)).gamma_q_squared(1) == 1
    assert QContext(1).gamma_q_squared(2) == 3
    assert QContext(2).gamma_q_squared(2) == Fraction(7, 3)


def test_omega_special_values():
    c = QContext(2)
    assert c.omega_rec(0, 2, 4) == 1
    # p = 2 lambda: Phi(2 kappa)! / Phi(2 kappa - 2 lambda)!
    assert c.omega_rec(2, 2, 4) == c.phi_factorial(4) / c.phi_factorial(2)
    assert c.omega_closed(2, 2, 4) == c.phi_factorial(4) / c.phi_factorial(2)
    assert c.omega_closed(1, 1, 1) == 1
    # p = 1: the average of Phi(2 kappa + m) over m < 2 lambda, weighted by 1/[2 lambda]
    expected = sum(c.series_Phi(5 + m) for m in range(3)) / c.qnum(3)
    assert c.omega_closed(1, 3, 5) == expected
    with pytest.raises(DomainError):
        c.omega_rec(1, 4, 2)


@settings(max_examples=80, deadline=None)
@given(q_values, st.integers(1, 8), st.integers(0, 6), st.data())
def test_omega_forms_agree(q, l2, extra, data):
    p = data.draw(st.integers(1, l2))
    c = QContext(q)
    assert c.omega_rec(p, l2, l2 + extra) == c.omega_closed(p, l2, l2 + extra)


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 8), st.integers(0, 6), st.data())
def test_omega_closed_is_one_classically(l2, extra, data):
    p = data.draw(st.integers(1, l2))
    assert QContext(1).omega_closed(p, l2, l2 + extra) == 1


def test_q_sixj_values():
    c = QContext(2)
    assert c.q_sixj(0, 0, 0, 0, 0, 0) == ExactValue.rational(1)
    assert c.q_sixj(1, 1, 0, 1, 1, 2) == ExactValue.rational(Fraction(2, 5))


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 6), st.integers(0, 6), st.integers(0, 6), st.integers(0, 6), st.integers(0, 6),
       st.integers(0, 6))
def test_classical_limit(a, b, c, d, e, f):
    assert QContext(1).q_sixj(a, b, c, d, e, f) == sixj(a, b, c, d, e, f)


@settings(max_examples=25, deadline=None)
@given(st.sampled_from([Fraction(2), Fraction(3, 2)]), st.integers(0, 3), st.integers(0, 3), st.integers(0, 3),
       st.integers(0, 3), st.integers(0, 3), st.integers(0, 3))
def test_q_sixj_matches_contraction_oracle(r, a, b, c, d, e, f):
    assert QContext(r ** 4).q_sixj(a, b, c, d, e, f) == q_sixj_by_contraction(a, b, c, d, e, f, r)


def test_sum_rule_examples():
    assert check_q_sum_rule(1, 1, 0, 1, 1, QContext(2)) == 0
    assert check_q_sum_rule(2, 2, 2, 2, 2, QContext(Fraction(3, 2))) == 0


def test_rejects_nonpositive_q():
    with pytest.raises(DomainError):
        QContext(0)
