"""Acceptance criteria 1-10, each printing one PASS/FAIL line with its tolerance."""

import time
from decimal import Decimal

import pytest

from supersum.exact import parity_case
from supersum.osp import poly_P, x0_closed, x_coeff
from supersum.providers import SyntheticProvider, TableProvider, iter_family_keys
from supersum.reference_forms import closed_form_P, x0_half_table, x0_integral_closed
from supersum.suites import SuiteConfig, run_suite

TOL_DECIMAL = Decimal(10) ** -30


@pytest.fixture
def announce(capsys):
    def emit(number, title, ok, detail):
        with capsys.disabled():
            print(f"\n[acceptance {number:>2}] {'PASS' if ok else 'FAIL'}  {title}: {detail}")
    return emit


def _suite(name, bound, **kw):
    return run_suite(name, bound, SuiteConfig(threads=4, **kw))


def test_criterion_01_su2_sum_rule(announce):
    rep = _suite("su2-sumrule", 12)
    ok = rep.ok and rep.passed > 10_000 and rep.wall_time < 300
    announce(1, "su(2) triangle sum rule, twice-values <= 12", ok,
             f"{rep.passed} tuples, {rep.failed} nonzero exact residuals, tolerance 0 (exact), "
             f"{rep.wall_time:.1f} s (limit 300 s)")
    assert ok, rep.counterexamples[:3]


def test_criterion_02_q_sum_rule(announce):
    rep = _suite("q-sumrule", 8)
    ok = rep.ok and rep.wall_time < 600
    announce(2, "q-deformed sum rule at q in {2, 3/2, 5/4} plus omega forms", ok,
             f"{rep.passed} exact checks, {rep.failed} failures, tolerance 0 (exact), "
             f"{rep.wall_time:.1f} s (limit 600 s)")
    assert ok, rep.counterexamples[:3]


def test_criterion_03_closed_forms(announce):
    checked, failures, cases = 0, [], set()
    for l2 in range(15):
        for k2 in range(15):
            for w2 in range(min(6, l2, k2) + 1):
                checked += 1
                cases.add(parity_case(l2, k2))
                if poly_P(w2, l2, k2) != closed_form_P(w2, l2, k2):
                    failures.append((w2, l2, k2))
    ok = not failures and cases == {"a", "b", "c", "d"}
    announce(3, "P recursion equals closed forms for omega <= 3, all four parity cases", ok,
             f"{checked} polynomial identities, {len(failures)} mismatches, symbolic equality")
    assert ok, failures[:5]


def test_criterion_04_x0_tables(announce):
    checked, failures = 0, []
    for l2 in range(15):
        for k2 in range(15):
            lo = min(l2, k2)
            for p in range(4):
                if 2 * p + 1 <= lo:
                    checked += 1
                    if x_coeff(0, 2 * p + 1, l2, k2) != x0_half_table(p, l2, k2):
                        failures.append(("half", p, l2, k2))
            for p in range(lo // 2 + 1):
                checked += 1
                if not x_coeff(0, 2 * p, l2, k2) == x0_integral_closed(p, l2, k2) == x0_closed(p, l2, k2):
                    failures.append(("integral", p, l2, k2))
            for w2 in range(3, lo + 1):
                checked += 1
                if x_coeff(w2 // 2, w2, l2, k2) != 0:
                    failures.append(("top", w2, l2, k2))
    announce(4, "x_0 tables for p = 0..3, integral x_0 closed form, vanishing top coefficient", not failures,
             f"{checked} exact comparisons on twice-values <= 14, {len(failures)} mismatches")
    assert not failures, failures[:5]


def test_criterion_05_zero_operators(announce):
    rep = _suite("theorems", 20)
    announce(5, "zero-operator families have zero closure polynomial", rep.ok,
             f"{rep.passed} family instances up to twice-value 20, {rep.failed} nonzero, exact; "
             f"{len(rep.findings)} nonzero cases outside the families listed as findings")
    assert rep.ok, rep.counterexamples[:3]


def test_criterion_06_conjecture_scans(announce):
    one, two = _suite("conjecture1", 14), _suite("conjecture2", 14)
    ok = one.ok and two.ok
    announce(6, "x integrality and the Q/P correspondence", ok,
             f"integrality {one.passed} checked / {one.failed} counterexamples, "
             f"correspondence {two.passed} checked / {two.failed} counterexamples, on twice-values <= 14 "
             f"(failures counted up to twice lambda 7, findings beyond: {len(one.findings) + len(two.findings)})")
    assert ok, (one.counterexamples[:3], two.counterexamples[:3])


def test_criterion_07_gamma_products(announce):
    rep = _suite("gamma-products", 20)
    announce(7, "double-factorial gamma product equals direct chain", rep.ok,
             f"{rep.passed} ranges with twice-values <= 20, {rep.failed} mismatches, symbolic equality")
    assert rep.ok, rep.counterexamples[:3]


def test_criterion_08_reduced_element_identities(announce):
    rep = _suite("redmat-identities", 40)
    announce(8, "alpha/gamma identities and generator conditions", rep.ok,
             f"{rep.passed} symbolic checks for 2j <= 40 including c0 = -1/4 and u = -(1/4)sqrt(1/2), "
             f"{rep.failed} failures, exact")
    assert rep.ok, rep.counterexamples[:3]


def _decimal_copy(seed, bound):
    exact = SyntheticProvider(seed)
    table = {}
    for a2 in range(bound + 1):
        for b2 in range(bound + 1):
            for d2 in range(bound + 1):
                for e2 in range(bound + 1):
                    for key in iter_family_keys(a2, b2, d2, e2):
                        table[key] = exact.value(*key).to_decimal(60)
    return TableProvider(table, provenance=f"decimal copy of synthetic:{seed}")


def test_criterion_09_sum_rule_laboratory(announce):
    providers = [SyntheticProvider(seed) for seed in (1, 2, 3)] + [_decimal_copy(4, 3)]
    reports = [_suite("lab-residuals", 3, provider=p, precision=60, tolerance=TOL_DECIMAL) for p in providers]
    ok = all(r.ok for r in reports)
    passed = sum(r.passed for r in reports)
    failed = sum(r.failed for r in reports)
    announce(9, "orthogonal tables: residual and identification system agree, contraction invariance holds",
             ok, f"{len(providers)} tables (3 exact, 1 decimal), {passed} checks, {failed} failures, "
                 f"tolerance 1e-30 at 60 digits; the general x formula itself is not reproducible")
    assert ok, [r.counterexamples[:2] for r in reports]


def test_criterion_10_kernel_oracles(announce):
    start = time.perf_counter()
    rep = _suite("kernel-oracles", 4)
    announce(10, "6-j and q-6-j kernels equal Clebsch-Gordan contraction", rep.ok,
             f"{rep.passed} exact comparisons on twice-values <= 4 (q = 16 and 81/16), {rep.failed} mismatches, "
             f"{time.perf_counter() - start:.1f} s")
    assert rep.ok, rep.counterexamples[:3]
