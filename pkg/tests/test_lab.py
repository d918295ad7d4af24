from decimal import Decimal
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from supersum.exact import DomainError, ExactValue, SurdSum
from supersum.lab import (
    contraction_invariance,
    degrees,
    emit_identification_system,
    gamma_product,
    orthogonality_check,
    phase_phi,
    phase_phi_consistent,
    poly_R,
    residual_delta_sum_rule,
    zeng_relation_check,
)
from supersum.osp import gamma_chain, gamma_osp
from supersum.poly import BiHomPoly
from supersum.providers import (
    ExperimentalProvider,
    SyntheticProvider,
    TableProvider,
    family_ranges,
    iter_family_keys,
    osp_range,
    to_decimal,
)

small = st.integers(0, 3)


def _tuples(bound):
    for a2 in range(bound + 1):
        for b2 in range(bound + 1):
            for c2 in osp_range(a2, b2):
                for d2 in range(bound + 1):
                    for e2 in osp_range(c2, d2):
                        if e2 <= bound:
                            yield a2, b2, c2, d2, e2


def test_R_and_degrees():
    r = poly_R(1, 1, 1, 1, 1)
    assert r.base == BiHomPoly.const(4) and r.d0_exponent == 2
    assert poly_R(2, 3, 5, 1, 6).base == BiHomPoly.const(1)
    info = degrees(1, 1, 1, 1, 1)
    assert info.branch == "both-half-integral" and info.omega == 0
    assert degrees(1, 1, 1, 1, 2).branch == "d0-frontal"


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 8), st.integers(0, 8), st.integers(0, 8), st.data())
def test_consistent_degree_always_matches(a2, b2, d2, data):
    c2 = data.draw(st.sampled_from(list(osp_range(a2, b2))))
    e2 = data.draw(st.sampled_from(list(osp_range(c2, d2))))
    info = degrees(a2, b2, c2, d2, e2)
    assert info.omega == info.omega_consistent
    if (a2 + b2) % 2 == 0:
        assert info.omega_literal == info.omega


def test_phase_examples():
    assert phase_phi(1, 1, 1, 1, 1) == -1
    for c2 in (0, 2, 4):
        assert phase_phi(1, 2, 3, 2, c2) == (-1) ** ((1 + 2 + 3 + 2) // 2)
    assert phase_phi(1, 1, 2, 1, 1) == (-1) ** ((1 + 1 + 2 + 1) // 2)
    # both triads half-integral with a + b integral
    assert phase_phi(2, 2, 2, 2, 1) == phase_phi_consistent(2, 2, 2, 2, 1)


def test_gamma_product_special_cases():
    assert gamma_product(1, 2).polynomial() == BiHomPoly.const(1)
    assert gamma_product(2, 2).polynomial() == gamma_osp(2)
    assert gamma_product(1, 1).polynomial() == BiHomPoly.linear(1, -1)
    assert gamma_product(3, 0).polynomial().is_zero


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 20), st.integers(0, 21))
def test_gamma_product_formula(hi, lo):
    assert gamma_product(hi, lo).polynomial() == gamma_chain(hi, lo)


def test_non_triad_gives_zero_residual():
    res = residual_delta_sum_rule(1, 1, 4, 1, 3, TableProvider())
    assert res.is_zero()


def test_system_shape():
    system = emit_identification_system(2, 3, 2, 3, 3)
    rows, cols = family_ranges(2, 3, 2, 3)
    assert system.unknowns == cols
    assert len(system.rows) == system.basis_degree + 1
    with pytest.raises(DomainError):
        emit_identification_system(0, 0, 1, 1, 2)


def test_residuals_match_system_exactly():
    provider = SyntheticProvider(3)
    for a2, b2, c2, d2, e2 in _tuples(3):
        direct = residual_delta_sum_rule(a2, b2, c2, d2, e2, provider)
        via = emit_identification_system(a2, b2, d2, e2, c2).residuals(provider)
        for x, y in zip(direct.residual, via):
            diff = SurdSum()
            diff += x
            diff -= y
            assert diff.is_zero


def test_decimal_path_agrees_with_exact():
    exact = SyntheticProvider(9)
    keys = [k for fam in [(1, 1, 1, 1), (2, 1, 2, 1), (2, 2, 2, 2)] for k in iter_family_keys(*fam)]
    decimal = TableProvider({k: exact.value(*k).to_decimal(60) for k in keys})
    for a2, b2, d2, e2 in [(1, 1, 1, 1), (2, 1, 2, 1), (2, 2, 2, 2)]:
        for c2 in family_ranges(a2, b2, d2, e2)[0]:
            r1 = residual_delta_sum_rule(a2, b2, c2, d2, e2, exact)
            r2 = residual_delta_sum_rule(a2, b2, c2, d2, e2, decimal)
            assert not r2.exact
            for x, y in zip(r1.residual, r2.residual):
                assert abs(to_decimal(x, 60) - y) < Decimal(10) ** -50


def test_degenerate_case_sign():
    """c = a+b and e = c+d leave a single f; the residual vanishes iff the entry is (-1)^(2e)."""
    for a2, b2, d2 in [(1, 1, 1), (2, 1, 2), (1, 2, 3), (2, 2, 2)]:
        c2, e2 = a2 + b2, a2 + b2 + d2
        f2 = b2 + d2
        for seed in range(6):
            provider = SyntheticProvider(seed)
            entry = provider.value(a2, b2, c2, d2, e2, f2)
            res = residual_delta_sum_rule(a2, b2, c2, d2, e2, provider)
            assert res.is_zero() == (entry == ExactValue.rational((-1) ** e2))


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 500), small, small, small, small)
def test_orthogonal_tables_pass_and_contract(seed, a2, b2, d2, e2):
    if not all(family_ranges(a2, b2, d2, e2)):
        return
    provider = SyntheticProvider(seed)
    assert orthogonality_check(provider, (a2, b2, d2, e2)).ok
    assert contraction_invariance(a2, b2, d2, e2, provider).ok


def test_corrupted_entry_is_localized():
    family = (2, 2, 2, 2)
    good = SyntheticProvider(4)
    table = {k: good.value(*k) for k in iter_family_keys(*family)}
    bad_key = (2, 2, 2, 2, 2, 1)
    table[bad_key] = table[bad_key] + ExactValue.rational(Fraction(1, 7))
    rep = orthogonality_check(TableProvider(table), family)
    assert not rep.ok
    assert rep.findings[-1] == {"suspect_column_f_twice": 1, "suspect_row_x_twice": 2}


def test_incomplete_table_is_reported():
    with pytest.raises(KeyError):
        orthogonality_check(TableProvider(), (1, 1, 1, 1))


def test_experimental_provider_is_not_orthogonal():
    rep = orthogonality_check(ExperimentalProvider(40), (1, 1, 1, 1), precision=40)
    assert not rep.ok


def test_zeng_sublevel_validity():
    rep = zeng_relation_check(1, 1, 0, 1, 1, 1, SyntheticProvider(1))
    invalid = [f for f in rep.findings if not f["valid"]]
    valid = [f for f in rep.findings if f["valid"]]
    assert len(invalid) + len(valid) == 16
    for f in invalid:
        c = f["choice_twice"]
        assert (c["l1"] + c["l2"]) % 2 != (c["L1"] + c["L2"]) % 2
    assert rep.ok
