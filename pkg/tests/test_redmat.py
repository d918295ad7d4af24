from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from supersum.exact import DomainError, ExactValue
from supersum.osp import alpha, gamma_osp
from supersum.poly import ONE, U, BiHomPoly
from supersum.redmat import (
    PhaseClass,
    SurdPoly,
    generator_conditions,
    identity_suite_A,
    rme_S_half,
    rme_S_one,
)

phases = st.builds(PhaseClass, st.integers(0, 1), st.integers(0, 1))
D0 = BiHomPoly((1,), d0=1)


def _signed(element):
    assert element.root == ONE
    return element.factor * element.sign


def test_diagonal_half_element_is_alpha():
    for j2 in range(1, 12):
        assert rme_S_half(j2, j2).factor == SurdPoly.of(alpha(j2), D0)


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 30), phases)
def test_pair_product_is_minus_gamma(j2, phase):
    pair = rme_S_half(j2, j2 - 1, phase).times(rme_S_half(j2 - 1, j2, phase), 1)
    assert _signed(pair) == SurdPoly({1: gamma_osp(j2) * -1})


def test_rank_bound():
    with pytest.raises(DomainError):
        rme_S_half(1, 3)
    with pytest.raises(DomainError):
        rme_S_one(0, 4)


def test_S_one_elements():
    for j2 in range(1, 12):
        diag = rme_S_one(j2, j2)
        expected = ExactValue.from_sqrt(2) * ExactValue.from_sqrt(j2 * (j2 + 1)) * -1
        assert diag.factor == SurdPoly.of(expected, U)
    for j2 in range(1, 12, 2):
        assert rme_S_one(j2, j2 - 1).is_zero
    for j2 in range(2, 12, 2):
        assert not rme_S_one(j2, j2 - 1).is_zero
    step = rme_S_one(2, 0)
    direct = rme_S_half(2, 1).times(rme_S_half(1, 0), 2)
    assert step == direct


def test_phase_class_rules():
    odd, even = PhaseClass(1, 0), PhaseClass(0, 0)
    assert odd.admissible(1, 0) and not even.admissible(1, 0)
    assert even.admissible(-1, Fraction(1, 2)) and not odd.admissible(-1, Fraction(1, 2))
    assert odd.admissible(Fraction(-1, 8), Fraction(1, 2)) is None
    with pytest.raises(DomainError):
        PhaseClass(2, 0)


def test_real_evaluation_in_admissible_regime():
    # c0 > 0 with the odd class gives real off-diagonal elements
    value = rme_S_half(2, 1, PhaseClass(1, 0)).evaluate(1, 0)
    assert value.square() == gamma_osp(2).evaluate(1, 0)
    with pytest.raises(DomainError):
        rme_S_half(2, 1, PhaseClass(0, 0)).evaluate(1, 0)


def test_identity_suite():
    rep = identity_suite_A(24)
    assert rep.ok and rep.passed > 100


def test_generator_conditions():
    rep = generator_conditions()
    assert rep.ok and rep.passed == 2
