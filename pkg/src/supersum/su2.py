"""su(2) triangle coefficients, 6-j symbols, closure coefficients and the
triangle sum rule, all in exact arithmetic.

Every spin argument is a twice-value (or a :class:`~supersum.exact.Spin`).
"""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Callable, Iterator

from .exact import (
    DomainError,
    ExactValue,
    factorial,
    is_triangle,
    sign_of_power,
    triangle_range,
    twice,
)
from .memo import memoized

__all__ = [
    "nabla",
    "delta",
    "delta_squared",
    "racah_sum",
    "sixj",
    "gamma_su2",
    "beta_coeff",
    "closure_coeff_su2",
    "sum_rule_sides_su2",
    "check_sum_rule_su2",
    "admissible_quintuples",
]


def _require_triangle(a2, b2, c2):
    if not is_triangle(a2, b2, c2, "su2"):
        raise DomainError(f"su(2) triangle rule fails for twice-values ({a2}, {b2}, {c2})")


def delta_squared(a, b, c) -> Fraction:
    """Square of the triangle coefficient: (a+b-c)!(a-b+c)!(-a+b+c)!/(a+b+c+1)!."""
    a2, b2, c2 = twice(a), twice(b), twice(c)
    _require_triangle(a2, b2, c2)
    p = (a2 + b2 + c2) // 2
    return Fraction(factorial(p - c2) * factorial(p - b2) * factorial(p - a2), factorial(p + 1))


def nabla(a, b, c) -> ExactValue:
    """Inverse Edmonds triangle: sqrt((a+b+c+1)!/((a+b-c)!(a-b+c)!(-a+b+c)!))."""
    return ExactValue.from_sqrt(1 / delta_squared(a, b, c))


def delta(a, b, c) -> ExactValue:
    return ExactValue.from_sqrt(delta_squared(a, b, c))


def racah_sum(a2, b2, c2, d2, e2, f2, fact: Callable[[int], object] = factorial):
    """Single-sum Racah series of the 6-j symbol {a b c; d e f}.

    The triangle factors are excluded, so the symbol equals this sum times
    the four deltas of (abc), (aef), (dbf), (dec).  ``fact`` may be a
    q-factorial to obtain the q-deformed series.
    """
    t1 = (a2 + b2 + c2) // 2
    t2 = (a2 + e2 + f2) // 2
    t3 = (d2 + b2 + f2) // 2
    t4 = (d2 + e2 + c2) // 2
    s1 = (a2 + b2 + d2 + e2) // 2
    s2 = (a2 + c2 + d2 + f2) // 2
    s3 = (b2 + c2 + e2 + f2) // 2
    total = 0
    for z in range(max(t1, t2, t3, t4), min(s1, s2, s3) + 1):
        den = (fact(z - t1) * fact(z - t2) * fact(z - t3) * fact(z - t4)
               * fact(s1 - z) * fact(s2 - z) * fact(s3 - z))
        term = Fraction(fact(z + 1)) / den
        total = total - term if z % 2 else total + term
    return total


def _triads_ok(a2, b2, c2, d2, e2, f2) -> bool:
    return (is_triangle(a2, b2, c2) and is_triangle(a2, e2, f2)
            and is_triangle(d2, b2, f2) and is_triangle(d2, e2, c2))


@memoized("su2.sixj_parts")
def _sixj_parts(a2, b2, c2, d2, e2, f2) -> tuple[Fraction, Fraction]:
    """(Racah sum, product of the four squared deltas)."""
    if not _triads_ok(a2, b2, c2, d2, e2, f2):
        return Fraction(0), Fraction(1)
    dsq = (delta_squared(a2, b2, c2) * delta_squared(a2, e2, f2)
           * delta_squared(d2, b2, f2) * delta_squared(d2, e2, c2))
    return racah_sum(a2, b2, c2, d2, e2, f2), dsq


def sixj(a, b, c, d, e, f) -> ExactValue:
    """Wigner 6-j symbol {a b c; d e f}; exact zero when a triad is not a triangle."""
    s, dsq = _sixj_parts(twice(a), twice(b), twice(c), twice(d), twice(e), twice(f))
    return ExactValue.make(s, dsq)


def gamma_su2(kappa) -> ExactValue:
    """Coefficient of c0 in [S^1/2 x S^kappa]^(kappa-1/2): sqrt((2k+1)2k/2)."""
    k2 = twice(kappa)
    return ExactValue.from_sqrt(Fraction((k2 + 1) * k2, 2))


def beta_coeff(p: int, two_lambda: int) -> int:
    """Binomial coefficient C(2 lambda, p) arising from the iterated coupling."""
    if not 0 <= p <= two_lambda:
        raise DomainError(f"need 0 <= p <= 2 lambda, got p={p}, 2 lambda={two_lambda}")
    return comb(two_lambda, p)


def closure_coeff_su2(a, b, c) -> tuple[int, ExactValue]:
    """[S^a x S^b]^c = c0^n * m * S^c; returns (n, m).

    n = a+b-c and m = (1/sqrt 2)^n sqrt((2a)!(2b)!/(2c+1)!) nabla(abc).
    """
    a2, b2, c2 = twice(a), twice(b), twice(c)
    _require_triangle(a2, b2, c2)
    n = (a2 + b2 - c2) // 2
    radicand = Fraction(factorial(a2) * factorial(b2), factorial(c2 + 1) * 2 ** n)
    return n, ExactValue.from_sqrt(radicand) * nabla(a2, b2, c2)


# ------------------------------------------------------------- sum rule

def sum_rule_sides_su2(a, b, c, d, e) -> tuple[Fraction, Fraction]:
    """Both sides of the su(2) triangle sum rule after multiplying by delta(abc) delta(cde).

    The left side becomes 1; each summand on the right becomes
    delta^2(abc) delta^2(cde) times the Racah series, so both are rational.
    """
    a2, b2, c2, d2, e2 = map(twice, (a, b, c, d, e))
    _require_triangle(a2, b2, c2)
    _require_triangle(c2, d2, e2)
    weight = delta_squared(a2, b2, c2) * delta_squared(c2, d2, e2)
    total = Fraction(0)
    for f2 in triangle_range(b2, d2):
        if not is_triangle(a2, f2, e2):
            continue
        s, _ = _sixj_parts(a2, b2, c2, d2, e2, f2)
        total += s
    sign = sign_of_power((a2 + b2 + d2 + e2) // 2)
    return Fraction(1), sign * (c2 + 1) * weight * total


def check_sum_rule_su2(a, b, c, d, e) -> Fraction:
    """Exact residual (left minus right) of the su(2) triangle sum rule."""
    lhs, rhs = sum_rule_sides_su2(a, b, c, d, e)
    return lhs - rhs


def admissible_quintuples(twice_max: int, algebra: str = "su2") -> Iterator[tuple[int, ...]]:
    """All (a,b,c,d,e) twice-values <= twice_max with (abc) and (cde) triangles, sorted."""
    for a2 in range(twice_max + 1):
        for b2 in range(twice_max + 1):
            for c2 in triangle_range(a2, b2, algebra):
                if c2 > twice_max:
                    break
                for d2 in range(twice_max + 1):
                    for e2 in triangle_range(c2, d2, algebra):
                        if e2 > twice_max:
                            break
                        yield a2, b2, c2, d2, e2
