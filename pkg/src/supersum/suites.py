"""Named verification suites.

Each suite scans a bounded set of inputs and returns a
:class:`VerificationReport`.  Inputs are split into chunks that run on a
thread pool; chunk results are merged in input order, so a report does not
depend on the thread count.
"""

from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from decimal import Decimal
from fractions import Fraction
from typing import Callable, Iterable

from .exact import DomainError, ExactValue, SurdSum
from .lab import (
    contraction_invariance,
    emit_identification_system,
    gamma_product,
    orthogonality_check,
    residual_delta_sum_rule,
    zeng_relation_check,
)
from .oracles import q_sixj_by_contraction, sixj_by_contraction
from .osp import (
    conjecture1_scan,
    conjecture2_scan,
    gamma_chain,
    poly_P,
    theorem_zero_checks,
    x_coeff,
)
from .providers import (
    ExperimentalProvider,
    FileProvider,
    SixJSuperProvider,
    SyntheticProvider,
    family_ranges,
    osp_range,
)
from .redmat import generator_conditions, identity_suite_A
from .reference_forms import closed_form_P, x0_half_table, x0_integral_closed
from .reports import VerificationReport
from .su2 import admissible_quintuples, sixj, sum_rule_sides_su2
from .suq2 import QContext, q_sum_rule_sides

__all__ = ["SuiteConfig", "SUITES", "DEFAULT_BOUNDS", "run_suite", "load_provider"]

DEFAULT_Q = (Fraction(2), Fraction(3, 2), Fraction(5, 4))
# deformation parameters r (q = r^4) for the q-6-j oracle comparison
ORACLE_R = (Fraction(2), Fraction(3, 2))
VERIFIED_TWICE_LAMBDA = 7

DEFAULT_BOUNDS = {
    "su2-sumrule": 12,
    "q-sumrule": 8,
    "poly-oracles": 14,
    "conjecture1": 14,
    "conjecture2": 14,
    "theorems": 20,
    "redmat-identities": 40,
    "gamma-products": 20,
    "lab-residuals": 3,
    "zeng": 2,
    "kernel-oracles": 4,
}


@dataclass
class SuiteConfig:
    threads: int = 1
    q_values: tuple[Fraction, ...] = DEFAULT_Q
    provider: SixJSuperProvider | None = None
    precision: int = 60
    tolerance: Decimal = Decimal(10) ** -30
    extra: dict = field(default_factory=dict)


def load_provider(spec: str, precision: int = 60) -> SixJSuperProvider:
    """A TSV path, ``synthetic:SEED`` or ``experimental``."""
    if spec.startswith("synthetic:"):
        try:
            seed = int(spec.split(":", 1)[1])
        except ValueError as exc:
            raise DomainError(f"malformed synthetic seed in {spec!r}") from exc
        return SyntheticProvider(seed)
    if spec == "experimental":
        return ExperimentalProvider(precision)
    return FileProvider(spec)


# ------------------------------------------------------------ fan-out

def _chunks(items: list, n: int) -> list[list]:
    size = max(1, -(-len(items) // max(1, n * 4)))
    return [items[i:i + size] for i in range(0, len(items), size)]


def _fan_out(name: str, params: dict, items: Iterable, check: Callable[[object, VerificationReport], None],
             threads: int) -> VerificationReport:
    """Apply ``check(item, report)`` to every item; merge chunk reports in input order."""
    items = list(items)

    def work(chunk):
        rep = VerificationReport(name)
        for item in chunk:
            check(item, rep)
        return rep

    chunks = _chunks(items, threads)
    if threads <= 1:
        parts = [work(c) for c in chunks]
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(work, chunks))
    out = VerificationReport(name, params)
    for p in parts:
        out.merge(p)
    return out


def _combine(name: str, params: dict, reports: list[VerificationReport]) -> VerificationReport:
    out = VerificationReport(name, params)
    for r in reports:
        out.merge(r)
    return out


# ------------------------------------------------------------- suites

def _su2_sumrule(bound: int, cfg: SuiteConfig) -> VerificationReport:
    def check(t, rep):
        lhs, rhs = sum_rule_sides_su2(*t)
        rep.record(lhs == rhs, {"abcde_twice": list(t), "lhs": str(lhs), "rhs": str(rhs)})
    return _fan_out("su2-sumrule", {"twice_max": bound}, admissible_quintuples(bound), check, cfg.threads)


def _q_sumrule(bound: int, cfg: SuiteConfig) -> VerificationReport:
    lam_max, kappa_max = bound, bound + 4
    parts = []
    tuples = list(admissible_quintuples(bound))
    for q in cfg.q_values:
        ctx = QContext(q)

        def check(t, rep, ctx=ctx, q=q):
            lhs, rhs = q_sum_rule_sides(*t, ctx)
            rep.record(lhs == rhs, {"q": str(q), "abcde_twice": list(t), "lhs": str(lhs), "rhs": str(rhs)})
        parts.append(_fan_out("q-sumrule", {}, tuples, check, cfg.threads))

        omega_args = [(p, l2, k2) for l2 in range(1, lam_max + 1) for k2 in range(l2, kappa_max + 1)
                      for p in range(1, l2 + 1)]

        def check_omega(t, rep, ctx=ctx, q=q):
            rec, closed = ctx.omega_rec(*t), ctx.omega_closed(*t)
            rep.record(rec == closed, {"q": str(q), "p": t[0], "lambda_twice": t[1], "kappa_twice": t[2],
                                       "omega_rec": str(rec), "omega_closed": str(closed)})
        parts.append(_fan_out("q-sumrule", {}, omega_args, check_omega, cfg.threads))

    # at q = 1 the closed form reduces to 1 without the classical shortcut
    one = QContext(1)
    rep = VerificationReport("q-sumrule")
    for l2 in range(1, lam_max + 1):
        for k2 in range(l2, kappa_max + 1):
            for p in range(1, l2 + 1):
                w = one.omega_closed(p, l2, k2)
                rep.record(w == 1, {"q": "1", "p": p, "lambda_twice": l2, "kappa_twice": k2, "omega": str(w)})
    parts.append(rep)
    params = {"twice_max": bound, "q": [str(q) for q in cfg.q_values],
              "omega_lambda_twice_max": lam_max, "omega_kappa_twice_max": kappa_max}
    return _combine("q-sumrule", params, parts)


def _poly_oracles(bound: int, cfg: SuiteConfig) -> VerificationReport:
    pairs = [(l2, k2) for l2 in range(bound + 1) for k2 in range(bound + 1)]

    def check(pair, rep):
        l2, k2 = pair
        lo = min(l2, k2)
        for w2 in range(0, min(6, lo) + 1):
            engine = poly_P(w2, l2, k2)
            form = closed_form_P(w2, l2, k2)
            rep.record(engine == form, {"check": "closed form", "omega_twice": w2, "lambda_twice": l2,
                                        "kappa_twice": k2, "engine": engine.render(), "closed": form.render()})
            if w2 == 6:
                printed = closed_form_P(w2, l2, k2, printed=True)
                if printed != engine:
                    rep.findings.append({"check": "printed omega=3 form", "lambda_twice": l2, "kappa_twice": k2,
                                         "engine": engine.render(), "printed": printed.render()})
        for p in range(0, 4):
            if 2 * p + 1 > lo:
                break
            got, want = x_coeff(0, 2 * p + 1, l2, k2), x0_half_table(p, l2, k2)
            rep.record(got == want, {"check": "x0 half table", "p": p, "lambda_twice": l2, "kappa_twice": k2,
                                     "engine": str(got), "table": str(want)})
        for p in range(0, lo // 2 + 1):
            got, want = x_coeff(0, 2 * p, l2, k2), x0_integral_closed(p, l2, k2)
            rep.record(got == want, {"check": "x0 integral closed form", "p": p, "lambda_twice": l2,
                                     "kappa_twice": k2, "engine": str(got), "closed": str(want)})
        for w2 in range(3, lo + 1):
            top = x_coeff(w2 // 2, w2, l2, k2)
            rep.record(top == 0, {"check": "top x vanishes", "omega_twice": w2, "lambda_twice": l2,
                                  "kappa_twice": k2, "value": str(top)})
    return _fan_out("poly-oracles", {"twice_max": bound}, pairs, check, cfg.threads)


def _conjecture1(bound: int, cfg: SuiteConfig) -> VerificationReport:
    rep = conjecture1_scan(bound, VERIFIED_TWICE_LAMBDA)
    rep.suite = "conjecture1"
    return rep


def _conjecture2(bound: int, cfg: SuiteConfig) -> VerificationReport:
    rep = conjecture2_scan(bound, VERIFIED_TWICE_LAMBDA)
    rep.suite = "conjecture2"
    return rep


def _theorems(bound: int, cfg: SuiteConfig) -> VerificationReport:
    parts = [theorem_zero_checks("T1", bound), theorem_zero_checks("T2", bound, literal=True)]
    return _combine("theorems", {"twice_max": bound}, parts)


def _redmat(bound: int, cfg: SuiteConfig) -> VerificationReport:
    return _combine("redmat-identities", {"twice_j_max": bound},
                    [identity_suite_A(bound), generator_conditions()])


def _gamma_products(bound: int, cfg: SuiteConfig) -> VerificationReport:
    pairs = [(hi, lo) for hi in range(0, bound + 1) for lo in range(0, bound + 2)]

    def check(pair, rep):
        hi, lo = pair
        formula = gamma_product(hi, lo).polynomial()
        direct = gamma_chain(hi, lo)
        rep.record(formula == direct, {"k_hi_twice": hi, "k_lo_twice": lo,
                                       "formula": formula.render(), "direct": direct.render()})
    return _fan_out("gamma-products", {"twice_max": bound}, pairs, check, cfg.threads)


def _require_provider(cfg: SuiteConfig, suite: str) -> SixJSuperProvider:
    if cfg.provider is None:
        raise DomainError(f"suite {suite} needs a provider (--provider)")
    return cfg.provider


def _families(bound: int) -> list[tuple[int, int, int, int]]:
    out = []
    for a2 in range(bound + 1):
        for b2 in range(bound + 1):
            for d2 in range(bound + 1):
                for e2 in range(bound + 1):
                    rows, cols = family_ranges(a2, b2, d2, e2)
                    if rows and cols:
                        out.append((a2, b2, d2, e2))
    return out


def _sumrule_agreement(family, provider, cfg, rep):
    """Residuals computed directly and through the emitted system must agree."""
    a2, b2, d2, e2 = family
    rows, _ = family_ranges(a2, b2, d2, e2)
    for c2 in rows:
        if c2 not in osp_range(a2, b2) or c2 not in osp_range(d2, e2):
            continue
        direct = residual_delta_sum_rule(a2, b2, c2, d2, e2, provider, cfg.precision)
        via = emit_identification_system(a2, b2, d2, e2, c2).residuals(provider, cfg.precision)
        agree = True
        for x, y in zip(direct.residual, via):
            if direct.exact:
                diff = SurdSum([ExactValue.rational(0)])
                diff += x
                diff -= y
                agree &= diff.is_zero
            else:
                agree &= abs(x - y) <= cfg.tolerance
        rep.record(agree, {"check": "residual vs system", "abcde_twice": [a2, b2, c2, d2, e2],
                           "direct": direct.rendered(), "system": [str(v) if not direct.exact else v.render()
                                                                  for v in via]})
        if not direct.is_zero(cfg.tolerance, cfg.precision):
            rep.findings.append({"nonzero_residual_abcde_twice": [a2, b2, c2, d2, e2],
                                 "branch": direct.branch, "max_abs": str(direct.max_abs(cfg.precision))})


def _lab_residuals(bound: int, cfg: SuiteConfig) -> VerificationReport:
    provider = _require_provider(cfg, "lab-residuals")

    def check(family, rep):
        ortho = orthogonality_check(provider, family, cfg.precision, cfg.tolerance)
        rep.merge(ortho)
        if not ortho.ok:
            return  # the agreement properties presume an orthogonal table
        _sumrule_agreement(family, provider, cfg, rep)
        rep.merge(contraction_invariance(*family, provider, cfg.precision, cfg.tolerance))

    params = {"abde_twice_max": bound, "provider": getattr(provider, "provenance", ""),
              "precision": cfg.precision, "tolerance": str(cfg.tolerance)}
    return _fan_out("lab-residuals", params, _families(bound), check, cfg.threads)


def _zeng(bound: int, cfg: SuiteConfig) -> VerificationReport:
    provider = _require_provider(cfg, "zeng")
    cases = []
    for J1 in range(bound + 1):
        for J2 in range(bound + 1):
            for j1 in range(bound + 1):
                for j2 in range(bound + 1):
                    for j3 in range(bound + 1):
                        if abs(J1 - j2) <= j3 <= J1 + j2 and abs(j1 - J2) <= j3 <= j1 + J2:
                            cases.append((J1, J2, j1, j2, j3))

    def check(case, rep):
        J1, J2, j1, j2, j3 = case
        sub = zeng_relation_check(J1, J2, 0, j1, j2, j3, provider, cfg.precision, cfg.tolerance)
        rep.passed += sub.passed
        for f in sub.findings:
            if f.get("valid") and not f.get("vanishes"):
                rep.findings.append({"J_twice": [J1, J2], "j_twice": [j1, j2, j3], **f})

    params = {"twice_max": bound, "provider": getattr(provider, "provenance", ""), "precision": cfg.precision}
    return _fan_out("zeng", params, cases, check, cfg.threads)


def _kernel_oracles(bound: int, cfg: SuiteConfig) -> VerificationReport:
    sextuples = list(_all_sextuples(bound))
    contexts = [(r, QContext(r ** 4)) for r in ORACLE_R]

    def check(t, rep):
        got, want = sixj(*t), sixj_by_contraction(*t)
        rep.record(got == want, {"kernel": "sixj", "args_twice": list(t), "kernel_value": got.render(),
                                 "oracle": want.render()})
        for r, ctx in contexts:
            got, want = ctx.q_sixj(*t), q_sixj_by_contraction(*t, r)
            rep.record(got == want, {"kernel": "qsixj", "q": str(r ** 4), "args_twice": list(t),
                                     "kernel_value": got.render(), "oracle": want.render()})

    params = {"twice_max": bound, "q": [str(r ** 4) for r in ORACLE_R]}
    return _fan_out("kernel-oracles", params, sextuples, check, cfg.threads)


def _all_sextuples(bound: int):
    rng = range(bound + 1)
    for a in rng:
        for b in rng:
            for c in rng:
                if (a + b + c) % 2 or not abs(a - b) <= c <= a + b:
                    continue
                for d in rng:
                    for e in rng:
                        if (c + d + e) % 2 or not abs(c - d) <= e <= c + d:
                            continue
                        for f in rng:
                            yield a, b, c, d, e, f


SUITES: dict[str, Callable[[int, SuiteConfig], VerificationReport]] = {
    "su2-sumrule": _su2_sumrule,
    "q-sumrule": _q_sumrule,
    "poly-oracles": _poly_oracles,
    "conjecture1": _conjecture1,
    "conjecture2": _conjecture2,
    "theorems": _theorems,
    "redmat-identities": _redmat,
    "gamma-products": _gamma_products,
    "lab-residuals": _lab_residuals,
    "zeng": _zeng,
    "kernel-oracles": _kernel_oracles,
}


def run_suite(name: str, bound: int | None = None, config: SuiteConfig | None = None) -> VerificationReport:
    """Run a named suite; ``bound`` overrides the default twice-value bound."""
    if name not in SUITES:
        raise DomainError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    cfg = config or SuiteConfig()
    if cfg.threads < 1:
        raise DomainError("threads must be >= 1")
    limit = DEFAULT_BOUNDS[name] if bound is None else bound
    if limit < 0:
        raise DomainError("bound must be non-negative")
    start = time.perf_counter()
    rep = SUITES[name](limit, cfg)
    rep.wall_time = time.perf_counter() - start
    return rep
