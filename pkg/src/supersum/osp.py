"""osp(1|2) iterated tensor operators: alpha/gamma coefficients, the P and Q
polynomial engines, closure relations, and the zero theorems and
conjecture scans built on them.

Conventions
-----------
* Spins and pseudo-degrees are twice-values.
* Polynomials live in (u, v) = (c0 + d0^2, d0^2); see :mod:`supersum.poly`.
* ``P(w, l, k)`` is symmetric in (l, k) and is always evaluated with
  l = inf(l, k).  Its recursions reach pseudo-degrees above inf(l, k) (up to
  2 inf); those values are obtained exactly from the Q polynomials by the
  change of normalization between the two closure forms, and vice versa.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass
from fractions import Fraction

from .exact import DomainError, ExactValue, factorial, sign_of_power, tau, twice
from .memo import memoized
from .poly import BiHomPoly, ONE
from .reports import VerificationReport

sys.setrecursionlimit(max(sys.getrecursionlimit(), 20000))

__all__ = [
    "alpha_norm",
    "alpha",
    "gamma_osp",
    "gamma_chain",
    "poly_P",
    "poly_P_extended",
    "poly_Q",
    "x_coeff",
    "x0_closed",
    "supertriangles",
    "e_norm",
    "ClosureCoefficient",
    "closure_unified",
    "closure_set_a",
    "closure_set_b",
    "theorem_zero_checks",
    "conjecture1_scan",
    "conjecture2_scan",
]


def _ratio(a: int, b: int) -> Fraction:
    """a!/b!"""
    return Fraction(factorial(a), factorial(b))


def _sgn4(x2: int, y2: int) -> int:
    """(-1)^(4 x y) for x = x2/2, y = y2/2."""
    return -1 if (x2 * y2) % 2 else 1


# ------------------------------------------------------ alpha and gamma

def alpha_norm(kappa) -> Fraction:
    """(2k + tau_k) / (2k (2k+1)), the d0 coefficient of the normalized alpha."""
    k2 = twice(kappa)
    if k2 < 1:
        raise DomainError("alpha is defined for kappa >= 1/2")
    return Fraction(k2 + k2 % 2, k2 * (k2 + 1))


def alpha(kappa) -> ExactValue:
    """Coefficient of d0 in alpha_kappa = (-1)^(2k+1) (2k + tau) / sqrt(2k(2k+1)) d0."""
    k2 = twice(kappa)
    if k2 < 1:
        raise DomainError("alpha is defined for kappa >= 1/2")
    return ExactValue.make(-sign_of_power(k2) * (k2 + k2 % 2), Fraction(1, k2 * (k2 + 1)))


def gamma_osp(kappa) -> BiHomPoly:
    """gamma_kappa = 2k u - (tau_k / 2k) v; gamma_0 = 0."""
    k2 = twice(kappa)
    if k2 == 0:
        return BiHomPoly.zero()
    return BiHomPoly.linear(k2, Fraction(-(k2 % 2), k2))


@memoized("osp.gamma_chain")
def _gamma_chain(hi2: int, lo2: int) -> BiHomPoly:
    out = ONE
    for k2 in range(hi2, lo2 - 1, -1):
        out = out * gamma_osp(k2)
    return out


def gamma_chain(k_hi, k_lo) -> BiHomPoly:
    """gamma_hi gamma_(hi-1/2) ... gamma_lo; the empty product (lo > hi) is 1."""
    return _gamma_chain(twice(k_hi), twice(k_lo))


# ------------------------------------------------------ P and Q engines

@memoized("osp.P")
def _P(w2: int, l2: int, k2: int) -> BiHomPoly:
    if l2 < 0 or k2 < 0 or w2 < 0:
        return BiHomPoly.zero()
    if l2 > k2:
        l2, k2 = k2, l2
    if w2 > 2 * l2:
        return BiHomPoly.zero()
    if w2 == 0:
        return ONE
    if w2 > l2:
        # low-rank region: express through Q with the normalization change
        pi2 = 2 * l2 - w2
        c2 = l2 + k2 - w2
        scale = _sgn4(w2, l2 + k2) * _sgn4(pi2, k2 + pi2) * _ratio(k2, c2)
        return _gamma_chain(k2, c2 + 1) * _Q(pi2, l2, k2) * scale
    total = BiHomPoly.zero()
    if w2 % 2 == 0:
        p = w2 // 2
        for n in range(0, l2 - p + 1):
            r = _ratio(k2 + n - p, k2 + n)
            total += _P(w2 - 1, l2 - n - 1, k2 + n).times_d0() * (r * alpha_norm(k2 + n))
            total += gamma_osp(k2 + n) * _P(w2 - 2, l2 - n - 1, k2 + n - 1) * ((l2 + k2 - p) * r)
        return total * (1 / _ratio(k2 - p, k2))
    p = (w2 - 1) // 2
    for n in range(0, l2 - p):
        sign = sign_of_power(n) * (l2 + k2 - p)
        total += _P(w2 - 1, l2 - n - 1, k2 + n).times_d0() * (sign * _ratio(k2 + n - p, k2 + n) * alpha_norm(k2 + n))
        total += gamma_osp(k2 + n) * _P(w2 - 2, l2 - n - 1, k2 + n - 1) * (-sign * _ratio(k2 + n - p - 1, k2 + n))
    return total * (1 / _ratio(k2 - p - 1, k2))


@memoized("osp.Q")
def _Q(pi2: int, l2: int, k2: int) -> BiHomPoly:
    """Q^pi(l; k) with k = sup."""
    if pi2 < 0 or l2 < 0:
        return BiHomPoly.zero()
    if pi2 == 0:
        return ONE
    if pi2 >= l2:
        w2 = 2 * l2 - pi2
        if w2 < 0:
            return BiHomPoly.zero()
        c2 = k2 - l2 + pi2
        scale = _sgn4(w2, l2 + k2) * _sgn4(pi2, k2 + pi2) * _ratio(c2, k2)
        return _P(w2, l2, k2) * scale
    ph = sign_of_power(l2)
    tk = k2 % 2
    edge = Fraction(k2 + tk, k2 + 1)
    if pi2 % 2 == 0:
        p = pi2 // 2
        total = _Q(pi2, l2 - 1, k2 - 1) * (k2 + p)
        total += _Q(pi2 - 1, l2 - 1, k2).times_d0() * (ph * edge)
        total += gamma_osp(k2 + 1) * _Q(pi2 - 2, l2 - 1, k2 + 1) * (k2 * (k2 - l2 + p + 1))
    else:
        t = (pi2 + 1) // 2
        total = _Q(pi2, l2 - 1, k2 - 1) * (k2 + t)
        total += _Q(pi2 - 1, l2 - 1, k2).times_d0() * (-ph * (k2 + t) * (k2 - l2 + t) * edge)
        total += gamma_osp(k2 + 1) * _Q(pi2 - 2, l2 - 1, k2 + 1) * (k2 * (k2 - l2 + t))
    return total * Fraction(1, k2)


def poly_P(omega, lam, kappa) -> BiHomPoly:
    """P^omega(lam, kappa) for the high-rank set: 0 <= omega <= inf(lam, kappa)."""
    w2, l2, k2 = twice(omega), twice(lam), twice(kappa)
    if w2 > min(l2, k2):
        raise DomainError(f"P needs omega <= inf(lambda, kappa); got twice-values omega={w2}, ({l2}, {k2})")
    return _P(w2, l2, k2)


def poly_P_extended(omega, lam, kappa) -> BiHomPoly:
    """P^omega for inf < omega <= 2 inf, as reached inside the P recursion; zero beyond."""
    return _P(twice(omega), twice(lam), twice(kappa))


def poly_Q(omega, lam, kappa) -> BiHomPoly:
    """Q^omega(lam; kappa) for the low-rank set: kappa >= lam >= 1/2, omega <= lam - 1/2."""
    w2, l2, k2 = twice(omega), twice(lam), twice(kappa)
    if k2 < l2:
        raise DomainError("Q needs kappa = sup(lambda, kappa)")
    if l2 < 1 or w2 > l2 - 1:
        raise DomainError(f"Q needs 0 <= omega <= lambda - 1/2; got twice-values omega={w2}, lambda={l2}")
    return _Q(w2, l2, k2)


# ------------------------------------------------------- x coefficients

def _x_any(m: int, w2: int, l2: int, k2: int) -> Fraction:
    """x coefficient of any P value met in the recursions."""
    if l2 > k2:
        l2, k2 = k2, l2
    if w2 < 0 or l2 < 0 or w2 > 2 * l2 or m < 0 or m > w2 // 2:
        return Fraction(0)
    if w2 > l2:
        return _P(w2, l2, k2).coeff(m)
    return _x(m, w2, l2, k2)


@memoized("osp.x")
def _x(m: int, w2: int, l2: int, k2: int) -> Fraction:
    """Coefficient-level recursion for x_m^omega, independent of the polynomial engine."""
    if w2 == 0:
        return Fraction(1 if m == 0 else 0)
    total = Fraction(0)
    if w2 % 2 == 0:
        p = w2 // 2
        for n in range(0, l2 - p + 1):
            kk = k2 + n
            r = _ratio(kk - p, kk)
            total += r * alpha_norm(kk) * _x_any(m - 1, w2 - 1, l2 - n - 1, kk)
            lower = (_x_any(m, w2 - 2, l2 - n - 1, kk - 1) * kk
                     - _x_any(m - 1, w2 - 2, l2 - n - 1, kk - 1) * Fraction(kk % 2, kk))
            total += (l2 + k2 - p) * r * lower
        return total / _ratio(k2 - p, k2)
    p = (w2 - 1) // 2
    for n in range(0, l2 - p):
        kk = k2 + n
        sign = sign_of_power(n) * (l2 + k2 - p)
        total += sign * _ratio(kk - p, kk) * alpha_norm(kk) * _x_any(m, w2 - 1, l2 - n - 1, kk)
        lower = (_x_any(m, w2 - 2, l2 - n - 1, kk - 1) * kk
                 - _x_any(m - 1, w2 - 2, l2 - n - 1, kk - 1) * Fraction(kk % 2, kk))
        total -= sign * _ratio(kk - p - 1, kk) * lower
    return total / _ratio(k2 - p - 1, k2)


def x_coeff(m: int, omega, lam, kappa) -> Fraction:
    """x_m^omega(lam, kappa): coefficient of u^([omega]-m) v^m in P^omega."""
    w2, l2, k2 = twice(omega), twice(lam), twice(kappa)
    if w2 > min(l2, k2):
        raise DomainError("x coefficients need omega <= inf(lambda, kappa)")
    if not 0 <= m <= w2 // 2:
        raise DomainError(f"index m={m} outside [0, {w2 // 2}]")
    if l2 > k2:
        l2, k2 = k2, l2
    return _x(m, w2, l2, k2)


def x0_closed(p: int, lam, kappa) -> Fraction:
    """Closed form of x_0^p: (2l)!(2k)!(2l+2k-p)!/(p!(2l-p)!(2k-p)!(2l+2k-2p)!).

    Valid for 0 <= p <= inf(2 lambda, 2 kappa); when p exceeds inf(lambda, kappa)
    it gives the leading coefficient of the extended-region polynomial.
    """
    l2, k2 = twice(lam), twice(kappa)
    if not 0 <= p <= min(l2, k2):
        raise DomainError(f"need 0 <= p <= inf(2 lambda, 2 kappa), got p={p}")
    return Fraction(factorial(l2) * factorial(k2) * factorial(l2 + k2 - p),
                    factorial(p) * factorial(l2 - p) * factorial(k2 - p) * factorial(l2 + k2 - 2 * p))


# ------------------------------------------------------------- closures

def supertriangles(a, b, c) -> tuple[ExactValue, ExactValue]:
    """(nabla^S, delta^S) of an osp(1|2) triad.

    Every factorial argument is replaced by its integral part:
    nabla^S = sqrt([a+b+c+1/2]! / ([a+b-c]! [a-b+c]! [-a+b+c]!)).
    """
    a2, b2, c2 = twice(a), twice(b), twice(c)
    if not abs(a2 - b2) <= c2 <= a2 + b2:
        raise DomainError(f"osp triangle rule fails for twice-values ({a2}, {b2}, {c2})")
    num = factorial((a2 + b2 + c2 + 1) // 2)
    den = factorial((a2 + b2 - c2) // 2) * factorial((a2 - b2 + c2) // 2) * factorial((-a2 + b2 + c2) // 2)
    sq = Fraction(num, den)
    return ExactValue.from_sqrt(sq), ExactValue.from_sqrt(1 / sq)


def e_norm(a, b, c) -> ExactValue:
    """E(a, b; c) = sqrt((2a)!(2b)!/(2c)!)."""
    a2, b2, c2 = twice(a), twice(b), twice(c)
    return ExactValue.from_sqrt(Fraction(factorial(a2) * factorial(b2), factorial(c2)))


@dataclass(frozen=True)
class ClosureCoefficient:
    """[S^a x S^b]^c = sign * gamma_chain(gamma_range) * poly * triangle / e_norm * S^c."""

    sign: int
    gamma_range: tuple[int, int]
    poly: BiHomPoly
    e_norm: ExactValue
    triangle: ExactValue

    def polynomial(self) -> BiHomPoly:
        """sign * gamma-product * polynomial part."""
        return _gamma_chain(*self.gamma_range) * self.poly * self.sign

    def scalar(self) -> ExactValue:
        return self.triangle / self.e_norm

    @property
    def is_zero(self) -> bool:
        return self.poly.is_zero

    def canonical(self) -> tuple[int, BiHomPoly]:
        """(squarefree radicand, rational polynomial) with value = sqrt(radicand) * polynomial."""
        s = self.scalar()
        full = self.polynomial()
        if full.is_zero:
            return 1, BiHomPoly.zero()
        return s.radicand, full * s.coeff

    def __eq__(self, other):
        if not isinstance(other, ClosureCoefficient):
            return NotImplemented
        return self.canonical() == other.canonical()

    def __hash__(self):
        return hash(self.canonical())

    def render(self, basis: str = "uv") -> str:
        radicand, full = self.canonical()
        return full.render(basis, radicand)

    __str__ = render


def closure_unified(a, b, c) -> ClosureCoefficient:
    """Closure coefficient of [S^a x S^b]^c valid for both rank sets."""
    a2, b2, c2 = twice(a), twice(b), twice(c)
    if not abs(a2 - b2) <= c2 <= a2 + b2:
        raise DomainError(f"osp triangle rule fails for twice-values ({a2}, {b2}, {c2})")
    sup2 = max(a2, b2, c2)
    pi2 = a2 + b2 + c2 - 2 * sup2
    t = (a2 + b2 + c2) % 2
    sign = sign_of_power(t * (1 + sup2))
    poly = _P(pi2, min(a2, b2), min(max(a2, b2), c2))
    norm = ExactValue.from_sqrt(Fraction(factorial(a2) * factorial(b2) * factorial(c2))) / factorial(sup2)
    return ClosureCoefficient(sign, (sup2, c2 + 1), poly, norm, supertriangles(a2, b2, c2)[1])


def closure_set_a(omega, lam, kappa) -> ClosureCoefficient:
    """[S^lam x S^kappa]^(lam+kappa-omega) for 0 <= omega <= inf(lam, kappa)."""
    w2, l2, k2 = twice(omega), twice(lam), twice(kappa)
    c2 = l2 + k2 - w2
    poly = poly_P(w2, l2, k2)
    return ClosureCoefficient(_sgn4(w2, l2 + k2), (0, 1), poly,
                              e_norm(l2, k2, c2), supertriangles(l2, k2, c2)[1])


def closure_set_b(pi, lam, kappa, use_q: bool = True) -> ClosureCoefficient:
    """[S^lam x S^kappa]^(kappa-lam+pi), kappa >= lam, 0 <= pi <= lam - 1/2.

    With ``use_q`` the polynomial part is Q^pi(lam; kappa); otherwise it is
    P^pi(lam, kappa-lam+pi), the two being equal exactly when the
    Q/P correspondence holds for these arguments.
    """
    p2, l2, k2 = twice(pi), twice(lam), twice(kappa)
    if k2 < l2:
        raise DomainError("set-B closure needs kappa >= lambda")
    c2 = k2 - l2 + p2
    poly = poly_Q(p2, l2, k2) if use_q else _P(p2, l2, c2)
    return ClosureCoefficient(_sgn4(p2, k2 + p2), (k2, c2 + 1), poly,
                              e_norm(l2, c2, k2), supertriangles(l2, k2, c2)[1])


# ------------------------------------------------------ theorems, scans

def _t1_family(bound: int):
    for k2 in range(0, bound + 1, 2):
        for kp2 in range(0, bound + 1, 2):
            c2 = k2 + kp2 - 1
            if c2 >= 0 and abs(k2 - kp2) <= c2:
                yield k2, kp2, c2


def _t2_family(bound: int, literal: bool):
    for k2 in range(0, bound + 1, 2):
        for s2 in range(1, bound + 1, 2):
            if not literal and k2 > s2:
                continue
            c2 = abs(k2 - s2) + 1
            if c2 <= k2 + s2:
                yield k2, s2, c2


def theorem_zero_checks(family: str, bound: int, literal: bool = False) -> VerificationReport:
    """Check that the closure polynomial vanishes on a zero-operator family.

    T1: [S^k x S^k']^(k+k'-1/2) with k, k' integral.
    T2: [S^k x S^s]^(s-k+1/2) with k integral, s half-integral and k < s
    (the integral spin is the smaller one).  ``literal=True`` also scans
    k > s, where the rank |k-s|+1/2 generally gives a nonzero coefficient;
    those cases are listed as findings.
    """
    if bound < 1:
        raise DomainError("bound must be >= 1")
    rep = VerificationReport(f"theorem-{family}", {"twice_max": bound, "literal": literal})
    if family == "T1":
        cases = [(x, False) for x in _t1_family(bound)]
    elif family == "T2":
        cases = [(x, x[0] > x[1]) for x in _t2_family(bound, literal)]
    else:
        raise DomainError(f"unknown family {family!r}")
    for (a2, b2, c2), outside in cases:
        for args in ((a2, b2, c2), (b2, a2, c2)):
            coeff = closure_unified(*args)
            if outside:
                if not coeff.is_zero:
                    rep.findings.append({"args_twice": list(args), "closure": coeff.render()})
                continue
            rep.record(coeff.is_zero, {"args_twice": list(args), "closure": coeff.render()})
    return rep


def _record_scan(rep: VerificationReport, ok: bool, example: dict, lam2: int, verified_bound: int | None):
    """Failures up to ``verified_bound`` (twice lambda) count; beyond it they are findings."""
    if ok or verified_bound is None or lam2 <= verified_bound:
        rep.record(ok, example)
    else:
        rep.findings.append(example)


def conjecture1_scan(bound: int, verified_bound: int | None = None) -> VerificationReport:
    """Every x_m^omega(lam, kappa) in the high-rank set has denominator 1."""
    rep = VerificationReport("conjecture1", {"twice_max": bound, "verified_twice_lambda": verified_bound})
    for l2 in range(0, bound + 1):
        for k2 in range(l2, bound + 1):
            for w2 in range(0, l2 + 1):
                poly = _P(w2, l2, k2)
                bad = [str(c) for c in poly.coeffs if c.denominator != 1]
                _record_scan(rep, not bad, {"omega_twice": w2, "lambda_twice": l2, "kappa_twice": k2,
                                            "poly": poly.render(), "non_integral": bad}, l2, verified_bound)
    return rep


def conjecture2_scan(bound: int, verified_bound: int | None = None) -> VerificationReport:
    """Q^pi(lam; kappa) = P^pi(lam, kappa - lam + pi) over the low-rank set."""
    rep = VerificationReport("conjecture2", {"twice_max": bound, "verified_twice_lambda": verified_bound})
    for l2 in range(1, bound + 1):
        for k2 in range(l2, bound + 1):
            for p2 in range(0, l2):
                q = _Q(p2, l2, k2)
                p = _P(p2, l2, k2 - l2 + p2)
                _record_scan(rep, q == p, {"pi_twice": p2, "lambda_twice": l2, "kappa_twice": k2,
                                           "Q": q.render(), "P": p.render()}, l2, verified_bound)
    return rep
