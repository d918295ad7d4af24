"""Reference closed forms for the first P polynomials and the x_0 tables.

These are kept separate from the recursion engine so that tests can compare
the two.  Arguments are twice-values; the forms are written in terms of
L = 2 lambda, K = 2 kappa and the parities tl, tk.

The omega = 3 form is given twice: as printed, and with the middle
coefficient corrected.  When both spins are half-integral the printed
middle coefficient is half the value produced by the recursions.
"""

from __future__ import annotations

from fractions import Fraction

from .exact import DomainError, factorial, parity_case, twice
from .poly import BiHomPoly

__all__ = ["closed_form_P", "x0_half_table", "x0_integral_closed"]

_HALF = Fraction(1, 2)
_SIXTH = Fraction(1, 6)


def closed_form_P(omega, lam, kappa, printed: bool = False) -> BiHomPoly:
    """Closed form of P^omega(lam, kappa) for omega <= 3.

    ``printed=True`` returns the omega = 3 form exactly as published,
    without the doubled middle coefficient in the half-integral case.
    """
    w2, L, K = twice(omega), twice(lam), twice(kappa)
    if w2 > min(L, K):
        raise DomainError("closed forms are stated for omega <= inf(lambda, kappa)")
    tl, tk = L % 2, K % 2
    if w2 == 0:
        return BiHomPoly.const(1)
    if w2 == 1:
        return BiHomPoly((L * tk + K * tl,), d0=1)
    if w2 == 2:
        return BiHomPoly.linear(L * K * (L + K - 1), -tl * tk)
    if w2 == 3:
        lead = (L - tl) * (K - tk) * (L + K - 2 + tl + tk) * (L * tk + K * tl - 1 - tl - tk + tl * tk)
        return BiHomPoly((lead,), d0=1) * BiHomPoly.linear(1, 0)
    if w2 == 4:
        front = _HALF * (L - tl) * (K - tk) * (L + K - 2 - tl - tk + 2 * tl * tk)
        inner = BiHomPoly.linear((L - 1 + tl) * (K - 1 + tk) * (L + K - 3 + tl + tk - 2 * tl * tk),
                                 -(1 + 2 * tl * tk))
        return BiHomPoly.linear(front, 0) * inner
    if w2 == 5:
        mix = tl + tk - tl * tk
        front = _HALF * (L - tl) * (K - tk) * (L + K - 2 - tl - tk) * (L * tk + K * tl - 2)
        inner = BiHomPoly.linear(
            (L - 2 - tk + tl * tk) * (K - 2 - tl + tl * tk) * (L + K - 4 + 2 * tl + 2 * tk - tl * tk) + 4 * mix,
            -mix)
        return BiHomPoly((front,), d0=1) * BiHomPoly.linear(1, 0) * inner
    if w2 == 6:
        front = _SIXTH * (L - tl) * (K - tk) * (L + K - 4 - tl - tk + 2 * tl * tk)
        middle = 3 * ((L - 2) * (K - 2) * (L + K - 3) + 2 * tl * tk)
        if not printed:
            middle *= 1 + tl * tk
        inner = BiHomPoly((
            (L - 1 + tl) * (K - 1 + tk) * (L - 2) * (K - 2) * (L + K - 3) * (L + K - 5 + tl + tk - 2 * tl * tk),
            -middle,
            3 * tl * tk,
        ))
        return BiHomPoly.linear(front, 0) * inner
    raise DomainError("closed forms are available for omega <= 3 only")


def x0_half_table(p: int, lam, kappa) -> Fraction:
    """Tabulated x_0^(p+1/2)(lam, kappa) for p = 0..3, by parity case."""
    L, K = twice(lam), twice(kappa)
    if not 0 <= p <= 3:
        raise DomainError("the table covers p = 0..3")
    if 2 * p + 1 > min(L, K):
        raise DomainError("need p + 1/2 <= inf(lambda, kappa)")
    case = parity_case(L, K)
    table = {
        0: dict(a=0, b=L + K, c=K, d=L),
        1: dict(a=-L * K * (L + K - 2),
                b=(L - 1) * (K - 1) * (L + K) * (L + K - 2),
                c=(L - 1) * K * (K - 2) * (L + K - 1),
                d=L * (L - 2) * (K - 1) * (L + K - 1)),
        2: dict(a=-L * (L - 2) * K * (K - 2) * (L + K - 2) * (L + K - 4),
                b=_HALF * (L - 1) * (K - 1) * (L + K - 2) * (L + K - 4) * ((L - 2) * (K - 2) * (L + K - 1) + 4),
                c=_HALF * (L - 1) * K * (K - 2) * (L + K - 3) * ((L - 2) * (K - 3) * (L + K - 2) + 4),
                d=_HALF * L * (L - 2) * (K - 1) * (L + K - 3) * ((L - 3) * (K - 2) * (L + K - 2) + 4)),
        3: dict(a=-_HALF * L * (L - 2) * K * (K - 2) * (L + K - 4) * (L + K - 6) * ((L - 3) * (K - 3) * (L + K - 3) + 4),
                b=_SIXTH * (L - 1) * (L - 3) * (K - 1) * (K - 3) * (L + K - 2) * (L + K - 4) * (L + K - 6)
                * ((L - 2) * (K - 2) * (L + K - 3) + 12),
                c=_SIXTH * (L - 1) * (L - 3) * K * (K - 2) * (K - 4) * (L + K - 3) * (L + K - 5)
                * ((L - 2) * (K - 3) * (L + K - 4) + 12),
                d=_SIXTH * L * (L - 2) * (L - 4) * (K - 1) * (K - 3) * (L + K - 3) * (L + K - 5)
                * ((L - 3) * (K - 2) * (L + K - 4) + 12)),
    }
    return Fraction(table[p][case])


def x0_integral_closed(p: int, lam, kappa) -> Fraction:
    """x_0^p(lam, kappa) for integral p = omega: (2l)!(2k)!(2l+2k-p)!/(p!(2l-p)!(2k-p)!(2l+2k-2p)!)."""
    L, K = twice(lam), twice(kappa)
    if p < 0 or p > min(L, K):
        raise DomainError("need 0 <= p <= inf(2 lambda, 2 kappa)")
    return Fraction(factorial(L) * factorial(K) * factorial(L + K - p),
                    factorial(p) * factorial(L - p) * factorial(K - p) * factorial(L + K - 2 * p))
