from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from supersum.exact import (
    DomainError,
    ExactValue,
    IncompatibleSurdError,
    Spin,
    SurdSum,
    double_factorial,
    factorial,
    integral_part,
    is_triangle,
    phase_two_kappa,
    tau,
    triangle_range,
    twice,
)

rationals = st.fractions(min_value=-50, max_value=50, max_denominator=30)
radicands = st.integers(min_value=1, max_value=60)


def test_spin_parsing_and_display():
    assert Spin.parse("3/2").twice == 3
    assert Spin.parse("0.5").twice == 1
    assert Spin.parse("2").twice == 4
    assert str(Spin(5)) == "5/2" and str(Spin(4)) == "2"
    with pytest.raises(DomainError):
        Spin.parse("1/3")
    with pytest.raises(DomainError):
        Spin.parse("-1")
    with pytest.raises(DomainError):
        twice(1.5)


def test_parity_helpers():
    assert [tau(x) for x in (2, 1, 0)] == [0, 1, 0]
    assert [phase_two_kappa(x) for x in (1, 2, 7)] == [-1, 1, -1]
    assert integral_part(7) == 3 and integral_part(6) == 3


def test_factorials():
    assert factorial(5) == 120
    assert double_factorial(0) == 1
    assert double_factorial(7) == 105
    assert double_factorial(-1) == 1


def test_surd_products_and_sums():
    assert ExactValue.make(2, 3) * ExactValue.make(5, 3) == ExactValue.rational(30)
    assert ExactValue.from_sqrt(2) + ExactValue.make(3, 2) == ExactValue.make(4, 2)
    with pytest.raises(IncompatibleSurdError):
        ExactValue.from_sqrt(2) + ExactValue.from_sqrt(3)


def test_surd_normal_form():
    assert ExactValue.from_sqrt(12) == ExactValue.make(2, 3)
    assert ExactValue.from_sqrt(Fraction(1, 2)).render() == "1/2*sqrt(2)"
    assert ExactValue.from_sqrt(24).render() == "2*sqrt(6)"


def test_triangles():
    assert is_triangle(1, 1, 1, "osp")
    assert not is_triangle(1, 1, 1, "su2")
    assert not is_triangle(2, 6, 2)
    assert list(triangle_range(2, 3)) == [1, 3, 5]
    assert list(triangle_range(2, 3, "osp")) == [1, 2, 3, 4, 5]


@given(rationals, radicands, rationals, radicands)
def test_product_matches_squares(a, p, b, r):
    x, y = ExactValue.make(a, p), ExactValue.make(b, r)
    assert (x * y).square() == x.square() * y.square()


@given(st.lists(st.tuples(rationals, radicands), max_size=8))
def test_surd_sum_cancels_itself(items):
    values = [ExactValue.make(c, r) for c, r in items]
    acc = SurdSum(values)
    for v in values:
        acc -= v
    assert acc.is_zero


@given(rationals.filter(lambda x: x != 0), radicands)
def test_inverse(c, r):
    x = ExactValue.make(c, r)
    assert x * x.inverse() == ExactValue.rational(1)


@given(rationals, radicands)
def test_decimal_rendering_agrees(c, r):
    x = ExactValue.make(c, r)
    assert abs(float(x.to_decimal(40)) - float(c) * r ** 0.5) < 1e-9 * (1 + abs(float(c)) * r)
