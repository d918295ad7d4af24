"""Brute-force reference values built from Clebsch-Gordan coefficients.

These are deliberately independent of the Racah single-sum kernels: the
6-j symbol is recovered from the overlap of the two coupling orders of three
angular momenta, summed over all magnetic quantum numbers.  For the q case the
coefficients contain powers q^(k/4), so the oracle takes q = r**4 with r
rational, keeping every quantity an exact surd.
"""

from __future__ import annotations

from fractions import Fraction

from .exact import ExactValue, SurdSum, is_triangle, sign_of_power, twice

__all__ = ["clebsch_gordan", "q_clebsch_gordan", "recoupling_overlap", "sixj_by_contraction", "q_sixj_by_contraction"]


def _qn(n: int, r: Fraction | None) -> Fraction:
    if r is None or r == 1:
        return Fraction(n)
    q = r ** 4
    return (q ** n - q ** -n) / (q - 1 / q)


def _qf(n: int, r) -> Fraction:
    out = Fraction(1)
    for k in range(2, n + 1):
        out *= _qn(k, r)
    return out


def _cg(j1, m1, j2, m2, j, m, r) -> ExactValue:
    """Clebsch-Gordan coefficient from the explicit single-sum formula.

    Arguments are twice-values.  With ``r`` given, returns the q-analogue
    at q = r**4 (symmetric q-numbers).
    """
    if m1 + m2 != m or not is_triangle(j1, j2, j):
        return ExactValue.rational(0)
    if abs(m1) > j1 or abs(m2) > j2 or abs(m) > j or (j1 + m1) % 2 or (j2 + m2) % 2 or (j + m) % 2:
        return ExactValue.rational(0)
    h = lambda x2: x2 // 2  # twice-value sums below are even
    n_ab = h(j1 + j2 - j)
    big = h(j1 + j2 + j) + 1
    radicand = (_qn(j + 1, r) * _qf(n_ab, r) * _qf(h(j1 - j2 + j), r) * _qf(h(-j1 + j2 + j), r) / _qf(big, r)
                * _qf(h(j1 + m1), r) * _qf(h(j1 - m1), r) * _qf(h(j2 + m2), r) * _qf(h(j2 - m2), r)
                * _qf(h(j + m), r) * _qf(h(j - m), r))
    total = Fraction(0)
    for k in range(0, n_ab + 1):
        args = (n_ab - k, h(j1 - m1) - k, h(j2 + m2) - k, h(j - j2 + m1) + k, h(j - j1 - m2) + k)
        if min(args) < 0:
            continue
        den = _qf(k, r)
        for x in args:
            den *= _qf(x, r)
        term = Fraction(sign_of_power(k)) / den
        if r is not None and r != 1:
            term *= r ** (-4 * k * big)  # q^(-k (j1+j2+j+1))
        total += term
    if r is not None and r != 1:
        # q^((j1+j2-j)(j1+j2+j+1)/2 + j1 m2 - j2 m1) in quarter powers of q
        quarters = 2 * n_ab * big + (j1 * m2 - j2 * m1)
        total *= r ** quarters
    return ExactValue.make(total, radicand)


def clebsch_gordan(j1, m1, j2, m2, j, m) -> ExactValue:
    """<j1 m1 j2 m2 | j m> for twice-valued arguments."""
    return _cg(j1, m1, j2, m2, j, m, None)


def q_clebsch_gordan(j1, m1, j2, m2, j, m, r: Fraction) -> ExactValue:
    """q-analogue of the Clebsch-Gordan coefficient at q = r**4."""
    return _cg(j1, m1, j2, m2, j, m, Fraction(r))


def _mrange(j2):
    return range(-j2, j2 + 1, 2)


def recoupling_overlap(j1, j2, j3, j, j12, j23, r=None) -> ExactValue:
    """<((j1 j2) j12, j3) j | (j1, (j2 j3) j23) j> by summing over all projections."""
    cg = (lambda *a: _cg(*a, r)) if r is not None else (lambda *a: _cg(*a, None))
    acc = SurdSum()
    m = j  # any fixed projection gives the same overlap
    for m1 in _mrange(j1):
        for m2 in _mrange(j2):
            m3 = m - m1 - m2
            if abs(m3) > j3:
                continue
            left = cg(j1, m1, j2, m2, j12, m1 + m2)
            if left.is_zero:
                continue
            left = left * cg(j12, m1 + m2, j3, m3, j, m)
            if left.is_zero:
                continue
            right = cg(j2, m2, j3, m3, j23, m2 + m3)
            if right.is_zero:
                continue
            acc += left * right * cg(j1, m1, j23, m2 + m3, j, m)
    return acc.as_exact()


def _sixj_from_overlap(a, b, c, d, e, f, r) -> ExactValue:
    a2, b2, c2, d2, e2, f2 = map(twice, (a, b, c, d, e, f))
    if not (is_triangle(a2, b2, c2) and is_triangle(a2, e2, f2)
            and is_triangle(d2, b2, f2) and is_triangle(d2, e2, c2)):
        return ExactValue.rational(0)
    # {j1 j2 j12; j3 j j23} with j1=a, j2=b, j12=c, j3=d, j=e, j23=f
    overlap = recoupling_overlap(a2, b2, d2, e2, c2, f2, r)
    norm = ExactValue.from_sqrt(_qn(c2 + 1, r) * _qn(f2 + 1, r))
    return overlap / norm * sign_of_power((a2 + b2 + d2 + e2) // 2)


def sixj_by_contraction(a, b, c, d, e, f) -> ExactValue:
    """6-j symbol {a b c; d e f} from Clebsch-Gordan contraction."""
    return _sixj_from_overlap(a, b, c, d, e, f, None)


def q_sixj_by_contraction(a, b, c, d, e, f, r: Fraction) -> ExactValue:
    """q-6-j symbol at q = r**4 from q-Clebsch-Gordan contraction."""
    return _sixj_from_overlap(a, b, c, d, e, f, Fraction(r))
