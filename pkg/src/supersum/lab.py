"""Tools for the osp(1|2) triangle sum rule, which is still an open problem.

Everything here works with the preliminary form of the rule.  For fixed
(a, b, c, d, e) it equates
    LHS(c) = sign * Gamma(abc) P(abc) Gamma(cde) P(cde)
             * (2 sup(abc))! (2 sup(cde))! / (2c)! * delta^S(abc) delta^S(cde)
to
    s_c * sum_f {a b c; d e f}^S G(f),
where G(f) is the same construction over the triads (b d f) and (a f e)
and s_c = (-1)^([a+b+c] + [c+d+e] + 2c).  Both sides are homogeneous in
(u, v, d0) of weight 2(a+b+d-e).  The frontal d0 is removed when that
weight is odd, so they expand on u^(N-m) v^m with N = [a+b+d-e].

The module also covers:
* R polynomials and y coefficients;
* degree bookkeeping for each parity branch;
* products of gamma coefficients in double-factorial form;
* residuals computed from a provider's 6-j^S values;
* the linear identification system whose unknowns are those values;
* the contraction-invariance check;
* the Zeng-type relation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from decimal import Decimal, localcontext
from fractions import Fraction

from .exact import DomainError, ExactValue, SurdSum, double_factorial, factorial, sign_of_power, twice
from .osp import _P, _gamma_chain, supertriangles
from .poly import BiHomPoly, ONE
from .providers import (
    MissingEntryError,
    SixJSuperProvider,
    family_ranges,
    orthogonality_weight,
    osp_range,
    scalar_factor_modulus,
    to_decimal,
)
from .reports import VerificationReport
from .su2 import nabla

__all__ = [
    "RPoly",
    "poly_R",
    "DegreeInfo",
    "degrees",
    "phase_phi",
    "phase_phi_consistent",
    "GammaProduct",
    "gamma_product",
    "triad_term",
    "Residual",
    "residual_delta_sum_rule",
    "IdentificationSystem",
    "emit_identification_system",
    "orthogonality_check",
    "contraction_invariance",
    "zeng_relation_check",
]


def _require_osp(a2, b2, c2):
    if not abs(a2 - b2) <= c2 <= a2 + b2:
        raise DomainError(f"osp triangle rule fails for twice-values ({a2}, {b2}, {c2})")


def _pseudo_degree(a2, b2, c2) -> int:
    """Twice pi(abc) = a+b+c-2 sup(a,b,c)."""
    return a2 + b2 + c2 - 2 * max(a2, b2, c2)


def _triad_P(a2, b2, c2) -> BiHomPoly:
    return _P(_pseudo_degree(a2, b2, c2), min(a2, b2), min(max(a2, b2), c2))


# ------------------------------------------------------------ R and y

@dataclass(frozen=True)
class RPoly:
    base: BiHomPoly
    d0_exponent: int
    omega_twice: tuple[int, int]

    @property
    def degree(self) -> int:
        return self.omega_twice[0] // 2 + self.omega_twice[1] // 2


def _convolve(xs, ys) -> list[Fraction]:
    out = [Fraction(0)] * (len(xs) + len(ys) - 1)
    for n, x in enumerate(xs):
        for k, y in enumerate(ys):
            out[n + k] += x * y
    return out


def poly_R(a, b, c, d, e) -> RPoly:
    """P(abc) P(cde) = d0^(tau_abc + tau_cde) R, with y_m from the convolution of the x lists."""
    a2, b2, c2, d2, e2 = map(twice, (a, b, c, d, e))
    _require_osp(a2, b2, c2)
    _require_osp(c2, d2, e2)
    w, w_prime = _pseudo_degree(a2, b2, c2), _pseudo_degree(c2, d2, e2)
    first, second = _triad_P(a2, b2, c2), _triad_P(c2, d2, e2)
    degree = w // 2 + w_prime // 2
    xs = first.padded(w // 2)
    ys = second.padded(w_prime // 2)
    ys_conv = _convolve(xs, ys)
    direct = first.strip_d0() * second.strip_d0()
    if direct.padded(degree) != tuple(ys_conv):
        raise AssertionError("R convolution disagrees with polynomial product")
    return RPoly(BiHomPoly(ys_conv), w % 2 + w_prime % 2, (w, w_prime))


# ------------------------------------------------------------ degrees

@dataclass(frozen=True)
class DegreeInfo:
    """Degree bookkeeping.

    ``omega`` is [omega]+[omega'] (the true R degree); ``omega_literal`` is the
    branch formula written with the tau_c correction; ``omega_consistent``
    uses tau_abc tau_cde instead, which always agrees with ``omega``.
    """

    branch: str
    omega: int
    omega_literal: int
    omega_consistent: int
    omega_f: int | None = None
    omega_f_literal: int | None = None
    omega_f_consistent: int | None = None
    branch_f: str | None = None


def _branch(t1: int, t2: int) -> str:
    if t1 != t2:
        return "d0-frontal"
    return "both-integral" if t1 == 0 else "both-half-integral"


def degrees(a, b, c, d, e, f=None) -> DegreeInfo:
    a2, b2, c2, d2, e2 = map(twice, (a, b, c, d, e))
    _require_osp(a2, b2, c2)
    _require_osp(c2, d2, e2)
    s4 = a2 + b2 + d2 + e2
    t_abc, t_cde = (a2 + b2 + c2) % 2, (c2 + d2 + e2) % 2
    branch = _branch(t_abc, t_cde)
    base = s4 // 2 + c2 - max(a2, b2, c2) - max(c2, d2, e2)
    omega = _pseudo_degree(a2, b2, c2) // 2 + _pseudo_degree(c2, d2, e2) // 2
    literal = base if branch == "d0-frontal" else base - (c2 % 2) * (1 - s4 % 2)
    consistent = base - t_abc * t_cde
    if f is None:
        return DegreeInfo(branch, omega, literal, consistent)
    f2 = twice(f)
    _require_osp(b2, d2, f2)
    _require_osp(a2, f2, e2)
    t_bdf, t_afe = (b2 + d2 + f2) % 2, (a2 + f2 + e2) % 2
    branch_f = _branch(t_bdf, t_afe)
    base_f = s4 // 2 + f2 - max(b2, d2, f2) - max(a2, f2, e2)
    omega_f = _pseudo_degree(b2, d2, f2) // 2 + _pseudo_degree(a2, f2, e2) // 2
    literal_f = base_f if branch_f == "d0-frontal" else base_f - (f2 % 2) * (1 - s4 % 2)
    return DegreeInfo(branch, omega, literal, consistent,
                      omega_f, literal_f, base_f - t_bdf * t_afe, branch_f)


def phase_phi(a, b, d, e, c) -> int:
    """(-1)^([a+b+d+e] + tau_c (1 - tau_(a+b+d+e))) as written for the same-parity branches."""
    a2, b2, d2, e2, c2 = map(twice, (a, b, d, e, c))
    s4 = a2 + b2 + d2 + e2
    return sign_of_power(s4 // 2 + (c2 % 2) * (1 - s4 % 2))


def phase_phi_consistent(a, b, d, e, c) -> int:
    """(-1)^([a+b+d+e] - tau_abc tau_cde), the sign produced by the recoupling phase."""
    a2, b2, d2, e2, c2 = map(twice, (a, b, d, e, c))
    s4 = a2 + b2 + d2 + e2
    return sign_of_power(s4 // 2 + ((a2 + b2 + c2) % 2) * ((c2 + d2 + e2) % 2))


# ------------------------------------------------------ gamma products

@dataclass(frozen=True)
class GammaProduct:
    """prefactor * u^u_power * Z, Z = prod_l ((2l+1)^2 u - v)."""

    prefactor: Fraction
    u_power: int
    z: BiHomPoly

    def polynomial(self) -> BiHomPoly:
        if self.prefactor == 0:
            return BiHomPoly.zero()
        u_part = BiHomPoly([1] + [0] * self.u_power) if self.u_power >= 0 else None
        if u_part is None:
            raise DomainError("negative u power")
        return u_part * self.z * self.prefactor


def gamma_product(k_hi, k_lo) -> GammaProduct:
    """gamma_hi gamma_(hi-1/2) ... gamma_lo in double-factorial form; empty range gives 1."""
    hi2, lo2 = twice(k_hi), twice(k_lo)
    if lo2 > hi2:
        return GammaProduct(Fraction(1), 0, ONE)
    if lo2 == 0:
        return GammaProduct(Fraction(0), 0, ONE)  # gamma_0 = 0
    hi_int, lo_int = hi2 // 2, lo2 // 2            # [k_hi], [k_lo]
    lo_minus = (lo2 - 1) // 2                      # [k_lo - 1/2]
    hi_plus = (hi2 + 1) // 2                       # [k_hi + 1/2]
    hi_minus = (hi2 - 1) // 2                      # [k_hi - 1/2]
    prefactor = Fraction(double_factorial(2 * hi_int) * double_factorial(2 * lo_int - 1),
                         double_factorial(2 * lo_minus) * double_factorial(2 * hi_plus - 1))
    z = ONE
    for l in range(lo_int, hi_minus + 1):
        z = z * BiHomPoly.linear((2 * l + 1) ** 2, -1)
    return GammaProduct(prefactor, hi_int - lo_minus, z)


# --------------------------------------------------------- triad terms

def triad_term(p2: int, q2: int, r2: int, s2: int, t2: int) -> tuple[BiHomPoly, ExactValue]:
    """Polynomial and scalar of one side of the preliminary rule.

    For the chain (p q r) then (r s t):
    sign * Gamma(pqr) P(pqr) Gamma(rst) P(rst) and
    (2 sup(pqr))! (2 sup(rst))! / (2r)! delta^S(pqr) delta^S(rst).
    Returns a zero polynomial when a triangle fails.
    """
    if not (abs(p2 - q2) <= r2 <= p2 + q2 and abs(r2 - s2) <= t2 <= r2 + s2):
        return BiHomPoly.zero(), ExactValue.rational(0)
    sup1, sup2 = max(p2, q2, r2), max(r2, s2, t2)
    sign = sign_of_power(sup1 * ((p2 + q2 + r2) % 2) + sup2 * ((r2 + s2 + t2) % 2))
    poly = (_gamma_chain(sup1, r2 + 1) * _triad_P(p2, q2, r2)
            * _gamma_chain(sup2, t2 + 1) * _triad_P(r2, s2, t2)) * sign
    scalar = (supertriangles(p2, q2, r2)[1] * supertriangles(r2, s2, t2)[1]
              * Fraction(factorial(sup1) * factorial(sup2), factorial(r2)))
    return poly, scalar


def _coeffs(poly: BiHomPoly, degree: int) -> tuple[Fraction, ...]:
    return poly.padded(degree)


def _basis_degree(a2, b2, d2, e2) -> int:
    weight = a2 + b2 + d2 - e2
    if weight < 0:
        return -1
    return weight // 2


def _lhs(a2, b2, c2, d2, e2, degree) -> list:
    poly, scalar = triad_term(a2, b2, c2, d2, e2)
    return [scalar * x for x in _coeffs(poly, degree)]


def _rhs_unit(a2, b2, d2, e2, f2, degree) -> list:
    """G(f) coefficients: the chain (b d f) then (a f e)."""
    poly, scalar = triad_term(b2, d2, f2, a2, e2)
    return [scalar * x for x in _coeffs(poly, degree)]


def _recoupling_sign(a2, b2, c2, d2, e2) -> int:
    return sign_of_power((a2 + b2 + c2) // 2 + (c2 + d2 + e2) // 2 + c2)


def _f_range(a2, b2, d2, e2) -> list[int]:
    return family_ranges(a2, b2, d2, e2)[1]


# ------------------------------------------------------------ residual

@dataclass
class Residual:
    fixed_spins: tuple[int, int, int, int, int]
    basis_degree: int
    branch: str
    exact: bool
    lhs: list
    rhs: list
    residual: list
    provenance: str = ""

    def max_abs(self, precision: int = 60) -> Decimal:
        if not self.residual:
            return Decimal(0)
        return max(abs(to_decimal(r, precision)) for r in self.residual)

    def is_zero(self, tolerance: Decimal | None = None, precision: int = 60) -> bool:
        if self.exact:
            return all(r.is_zero for r in self.residual)
        tol = tolerance if tolerance is not None else Decimal(10) ** -30
        return self.max_abs(precision) <= tol

    def rendered(self) -> list[str]:
        return [r.render() if isinstance(r, (SurdSum, ExactValue)) else str(r) for r in self.residual]

    def to_dict(self) -> dict:
        return {"fixed_spins": list(self.fixed_spins), "basis_degree": self.basis_degree,
                "branch": self.branch, "exact": self.exact, "provenance": self.provenance,
                "residual": self.rendered()}


def _accumulate(items, exact: bool, precision: int):
    """Sum a list of (ExactValue | Decimal) products, exactly when possible."""
    if exact:
        acc = SurdSum()
        for it in items:
            acc += it
        return acc
    with localcontext() as ctx:
        ctx.prec = precision + 10
        total = Decimal(0)
        for it in items:
            total += to_decimal(it, precision + 10)
        ctx.prec = precision
        return +total


def _signed(value, sign: int):
    """Multiply by +-1 without rounding."""
    if sign > 0:
        return value
    return value.copy_negate() if isinstance(value, Decimal) else -value


def _mul(x, y, precision: int):
    """Product of two exact-or-decimal values; decimal as soon as either factor is."""
    if isinstance(x, Decimal) or isinstance(y, Decimal):
        with localcontext() as ctx:
            ctx.prec = precision + 10
            return to_decimal(x, precision + 10) * to_decimal(y, precision + 10)
    return x * y


def residual_delta_sum_rule(a, b, c, d, e, provider: SixJSuperProvider, precision: int = 60) -> Residual:
    """Coefficient-wise LHS - RHS of the preliminary rule on u^(N-m) v^m.

    When (abc) or (cde) is not a triad both sides vanish; the result is an
    all-zero residual and the provider is not consulted.
    """
    a2, b2, c2, d2, e2 = map(twice, (a, b, c, d, e))
    degree = _basis_degree(a2, b2, d2, e2)
    branch = _branch((a2 + b2 + c2) % 2, (c2 + d2 + e2) % 2)
    if not (abs(a2 - b2) <= c2 <= a2 + b2 and abs(c2 - d2) <= e2 <= c2 + d2):
        zeros = [SurdSum() for _ in range(degree + 1)]
        return Residual((a2, b2, c2, d2, e2), degree, branch, True, [ExactValue.rational(0)] * (degree + 1),
                        list(zeros), [SurdSum() for _ in range(degree + 1)], getattr(provider, "provenance", ""))
    lhs = _lhs(a2, b2, c2, d2, e2, degree)
    s_c = _recoupling_sign(a2, b2, c2, d2, e2)
    terms: list[list] = [[] for _ in range(degree + 1)]
    exact = True
    for f2 in _f_range(a2, b2, d2, e2):
        sixj = provider.value(a2, b2, c2, d2, e2, f2)
        if isinstance(sixj, Decimal):
            exact = False
        unit = _rhs_unit(a2, b2, d2, e2, f2, degree)
        for m, g in enumerate(unit):
            if not g.is_zero:
                terms[m].append(_mul(g * s_c, sixj, precision))
    rhs = [_accumulate(t, exact, precision) for t in terms]
    residual = []
    for m in range(degree + 1):
        if exact:
            acc = SurdSum([lhs[m]])
            acc -= rhs[m]
            residual.append(acc)
        else:
            with localcontext() as ctx:
                ctx.prec = precision
                residual.append(lhs[m].to_decimal(precision) - rhs[m])
    return Residual((a2, b2, c2, d2, e2), degree, branch, exact, lhs, rhs, residual,
                    getattr(provider, "provenance", ""))


# ------------------------------------------------ identification system

@dataclass
class IdentificationSystem:
    fixed_spins: tuple[int, int, int, int, int]
    basis_degree: int
    unknowns: list[int]
    rows: list[dict] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "fixed_spins": {"a": self.fixed_spins[0], "b": self.fixed_spins[1], "d": self.fixed_spins[2],
                            "e": self.fixed_spins[3], "c": self.fixed_spins[4], "twice_values": True},
            "basis_degree": self.basis_degree,
            "unknowns": self.unknowns,
            "rows": [{"m": r["m"],
                      "unknown_coeffs": {str(f): v.render() for f, v in r["unknown_coeffs"].items()},
                      "rhs": r["rhs"].render()} for r in self.rows],
        }

    def residuals(self, provider: SixJSuperProvider, precision: int = 60) -> list:
        """rhs - sum_f coeff_f * value_f for each row (LHS minus RHS of the rule)."""
        a2, b2, d2, e2, c2 = self.fixed_spins
        values = {f: provider.value(a2, b2, c2, d2, e2, f) for f in self.unknowns}
        exact = not any(isinstance(v, Decimal) for v in values.values())
        out = []
        for row in self.rows:
            items = [_mul(coef, values[f], precision) for f, coef in row["unknown_coeffs"].items()]
            total = _accumulate(items, exact, precision)
            if exact:
                acc = SurdSum([row["rhs"]])
                acc -= total
                out.append(acc)
            else:
                with localcontext() as ctx:
                    ctx.prec = precision
                    out.append(row["rhs"].to_decimal(precision) - total)
        return out


def emit_identification_system(a, b, d, e, c) -> IdentificationSystem:
    """One linear equation per binomial u^(N-m) v^m; the unknowns are {a b c; d e f}^S over f."""
    a2, b2, d2, e2, c2 = map(twice, (a, b, d, e, c))
    _require_osp(a2, b2, c2)
    _require_osp(c2, d2, e2)
    degree = _basis_degree(a2, b2, d2, e2)
    lhs = _lhs(a2, b2, c2, d2, e2, degree)
    s_c = _recoupling_sign(a2, b2, c2, d2, e2)
    fs = _f_range(a2, b2, d2, e2)
    units = {f: _rhs_unit(a2, b2, d2, e2, f, degree) for f in fs}
    system = IdentificationSystem((a2, b2, d2, e2, c2), degree, fs)
    for m in range(degree + 1):
        coeffs = {f: units[f][m] * s_c for f in fs}
        system.rows.append({"m": m, "unknown_coeffs": coeffs, "rhs": lhs[m]})
    return system


# --------------------------------------------------------- orthogonality

def orthogonality_check(provider: SixJSuperProvider, family: tuple[int, int, int, int],
                        precision: int = 60, tolerance: Decimal | None = None) -> VerificationReport:
    """sum_x w_x {a b x; d e f}^S {a b x; d e f'}^S = t_f delta_(f f') for one family.

    A failing table is reported pair by pair; when all failures share one
    column, the row whose entries best explain the off-diagonal residuals is
    named as the suspect.
    """
    a2, b2, d2, e2 = family
    tol = tolerance if tolerance is not None else Decimal(10) ** -30
    rep = VerificationReport("orthogonality", {"family_twice": list(family), "precision": precision})
    rows, cols = family_ranges(a2, b2, d2, e2)
    try:
        table = {(x, f): provider.value(a2, b2, x, d2, e2, f) for x in rows for f in cols}
    except MissingEntryError as exc:
        raise MissingEntryError(f"incomplete table for family {family}: {exc}") from exc
    exact = not any(isinstance(v, Decimal) for v in table.values())
    weights = {x: orthogonality_weight(a2 + b2, d2 + e2, x) for x in rows}
    residuals = {}
    for i, f in enumerate(cols):
        for fp in cols[i:]:
            items = [_signed(_mul(table[x, f], table[x, fp], precision), weights[x]) for x in rows]
            total = _accumulate(items, exact, precision)
            target = orthogonality_weight(a2 + e2, b2 + d2, f) if f == fp else 0
            shown = total.render() if exact else str(total)
            if exact:
                diff = SurdSum([total])
                diff -= target
                ok = diff.is_zero
            else:
                diff = total - target
                ok = abs(diff) <= tol
            if not ok:
                residuals[f, fp] = diff
            rep.record(ok, {"f_twice": f, "fp_twice": fp, "sum": shown, "expected": target})
    if residuals:
        _localize(rep, residuals, table, rows, cols, precision)
    return rep


def _localize(rep, residuals, table, rows, cols, precision):
    counts: dict[int, int] = {}
    for f, fp in residuals:
        counts[f] = counts.get(f, 0) + 1
        if fp != f:
            counts[fp] = counts.get(fp, 0) + 1
    column = max(sorted(counts), key=lambda k: counts[k])
    others = [f for f in cols if f != column]
    vec = []
    for f in others:
        key = (min(column, f), max(column, f))
        r = residuals.get(key)
        vec.append(float(to_decimal(r, precision)) if r is not None else 0.0)
    best, best_score = None, -1.0
    if any(vec):
        for x in rows:
            row = [float(to_decimal(table[x, f], precision)) for f in others]
            norm = sum(v * v for v in row) ** 0.5 * sum(v * v for v in vec) ** 0.5
            score = abs(sum(p * q for p, q in zip(row, vec))) / norm if norm else 0.0
            if score > best_score + 1e-12:
                best, best_score = x, score
    rep.findings.append({"suspect_column_f_twice": column,
                         "suspect_row_x_twice": best if best is not None else rows})


# ------------------------------------------------ contraction invariance

def contraction_invariance(a, b, d, e, provider: SixJSuperProvider,
                           precision: int = 60, tolerance: Decimal | None = None) -> VerificationReport:
    """Apply sum_c {a b c; d e f'}^S to both sides of the rule.

    For each f' the contracted residual sum_c M_cf' LHS(c) - t_f' G(f')
    must equal sum_c M_cf' residual(c); the two agree for every table
    exactly when the table is pseudo-orthogonal.
    """
    a2, b2, d2, e2 = map(twice, (a, b, d, e))
    tol = tolerance if tolerance is not None else Decimal(10) ** -30
    rep = VerificationReport("contraction-invariance", {"abde_twice": [a2, b2, d2, e2]})
    rows, cols = family_ranges(a2, b2, d2, e2)
    degree = _basis_degree(a2, b2, d2, e2)
    if degree < 0 or not rows:
        return rep
    residuals = {c: residual_delta_sum_rule(a2, b2, c, d2, e2, provider, precision) for c in rows}
    exact = all(r.exact for r in residuals.values())
    for fp in cols:
        t_fp = orthogonality_weight(a2 + e2, b2 + d2, fp)
        unit = _rhs_unit(a2, b2, d2, e2, fp, degree)
        for m in range(degree + 1):
            direct = [_mul(residuals[c].lhs[m], provider.value(a2, b2, c, d2, e2, fp), precision) for c in rows]
            via = []
            for c in rows:
                r = residuals[c].residual[m]
                mval = provider.value(a2, b2, c, d2, e2, fp)
                if exact:
                    via.append(r.scaled(mval))
                else:
                    via.append(_mul(r, mval, precision))
            if exact:
                lhs_side = _accumulate(direct, True, precision)
                lhs_side -= unit[m] * t_fp
                rhs_side = SurdSum()
                for v in via:
                    rhs_side += v
                diff = SurdSum()
                diff += lhs_side
                diff -= rhs_side
                ok = diff.is_zero
                shown = (lhs_side.render(), rhs_side.render())
            else:
                with localcontext() as ctx:
                    ctx.prec = precision
                    lhs_side = _accumulate(direct, False, precision) - to_decimal(unit[m] * t_fp, precision)
                    rhs_side = sum(via, Decimal(0))
                    ok = abs(lhs_side - rhs_side) <= tol
                    shown = (str(lhs_side), str(rhs_side))
            rep.record(ok, {"fp_twice": fp, "m": m, "contracted": shown[0], "summed_residuals": shown[1]})
    return rep


# ------------------------------------------------------------ Zeng check

def _sub(j2: int) -> tuple[int, ...]:
    return (j2,) if j2 == 0 else (j2, j2 - 1)


def _sf_times_nabla(j1, j2, j3, l1, l2, l3) -> ExactValue:
    sf = scalar_factor_modulus(j1, j2, j3, l1, l2, l3)
    if sf.is_zero:
        return sf
    return sf * nabla(l1, l2, l3)


def zeng_relation_check(J1, J2, J3, j1, j2, j3, provider: SixJSuperProvider,
                        precision: int = 60, tolerance: Decimal | None = None) -> VerificationReport:
    """Evaluate both sides of the updated Zeng relation for all 16 sublevel choices.

    ``J3`` is the spin fixing the right-hand 6-j^S family only through the
    summation; the argument is accepted for symmetry and recorded.  Every
    combination is listed under findings with its residual; combinations
    whose residual vanishes within tolerance count as passed.  Invalid
    choices (tau(l1+l2) != tau(L1+L2)) are listed and skipped.
    """
    J1, J2, J3, j1, j2, j3 = map(twice, (J1, J2, J3, j1, j2, j3))
    tol = tolerance if tolerance is not None else Decimal(10) ** -30
    rep = VerificationReport("zeng", {"J_twice": [J1, J2, J3], "j_twice": [j1, j2, j3], "precision": precision})
    for L1 in _sub(J1):
        for L2 in _sub(J2):
            for l1 in _sub(j1):
                for l2 in _sub(j2):
                    choice = {"L1": L1, "L2": L2, "l1": l1, "l2": l2}
                    if (l1 + l2) % 2 != (L1 + L2) % 2:
                        rep.findings.append({"choice_twice": choice, "valid": False})
                        continue
                    lhs, rhs = _zeng_sides(J1, J2, j1, j2, j3, L1, L2, l1, l2, provider, precision)
                    with localcontext() as ctx:
                        ctx.prec = precision
                        diff = lhs - rhs
                    ok = abs(diff) <= tol
                    entry = {"choice_twice": choice, "valid": True, "lhs": str(lhs), "rhs": str(rhs),
                             "residual": str(diff), "vanishes": ok}
                    rep.findings.append(entry)
                    if ok:
                        rep.passed += 1
    return rep


def _zeng_sides(J1, J2, j1, j2, j3, L1, L2, l1, l2, provider, precision):
    d1, d2 = J1 - L1, J2 - L2         # twice (J - L), 0 or 1
    e1, e2 = j1 - l1, j2 - l2         # twice (j - l)
    l3 = j3 - ((j3 + L1 + l2) % 2)
    with localcontext() as ctx:
        ctx.prec = precision + 10
        total = Decimal(0)
        for J3 in osp_range(J1, J2):
            if not (abs(j1 - j2) <= J3 <= j1 + j2):
                continue
            if not (abs(J1 - j2) <= j3 <= J1 + j2 and abs(j1 - J2) <= j3 <= j1 + J2):
                continue
            L3 = J3 - ((J3 + l1 + l2) % 2)
            if L3 < 0:
                continue
            psi = (j1 * J1 + j2 * J2 + j3 * J3 + (j1 + j2 + J3) * j3
                   + (J1 + J2 + J3) * d1 * d2
                   + (j1 + j2 + J3) * (e1 * e2 + (l1 + L2) * (l2 + L1)))
            sign = sign_of_power(psi + (j1 + j2 + J3) // 2 + (J1 + J2 + J3) // 2 + J3)
            first = _sf_times_nabla(J1, J2, J3, L1, L2, L3)
            second = _sf_times_nabla(j1, j2, J3, l1, l2, L3)
            if first.is_zero or second.is_zero:
                continue
            sixj = provider.value(J1, j2, j3, j1, J2, J3)
            weight = (first * second * Fraction(sign, L3 + 1)).to_decimal(precision + 10)
            total += weight * to_decimal(sixj, precision + 10)
        A2, B2 = J1 + j2 + j3, j1 + J2 + j3
        phi = A2 * e1 + B2 * e2 + A2 * e2 * d1 + B2 * e1 * d2
        right = (_sf_times_nabla(J1, j2, j3, L1, l2, l3) * _sf_times_nabla(j1, J2, j3, l1, L2, l3)
                 * Fraction(sign_of_power(phi), l3 + 1)) if l3 >= 0 else ExactValue.rational(0)
        rhs = right.to_decimal(precision + 10)
        ctx.prec = precision
        return +total, +rhs
