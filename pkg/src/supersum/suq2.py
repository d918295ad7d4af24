"""q-deformed arithmetic at exact rational q, the F and Phi series, the
omega coefficients of the su_q(2) closure relation, q-6-j symbols and the
q-triangle sum rule.

q-numbers use the symmetric convention [n] = (q^n - q^-n)/(q - q^-1).
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field
from fractions import Fraction

from .exact import DomainError, ExactValue, is_triangle, sign_of_power, triangle_range, twice
from . import su2

__all__ = ["QContext", "check_q_sum_rule", "q_sum_rule_sides"]


@dataclass(eq=False)
class QContext:
    """Evaluation context for a fixed rational q > 0.

    q = 1 is a classical branch: [n] = n and Phi = omega = 1.  Each context
    owns its memo tables, which may be shared across threads.
    """

    q: Fraction
    _cache: dict = field(default_factory=dict, repr=False)
    _lock: threading.Lock = field(default_factory=threading.Lock, repr=False)

    def __post_init__(self):
        self.q = Fraction(self.q)
        if self.q <= 0:
            raise DomainError("q must be a positive rational")

    @property
    def classical(self) -> bool:
        return self.q == 1

    def _memo(self, key, compute):
        hit = self._cache.get(key)
        if hit is None:
            hit = compute()
            with self._lock:
                hit = self._cache.setdefault(key, hit)
        return hit

    # ---------------------------------------------------- basic numbers
    def qnum(self, n: int) -> Fraction:
        if self.classical:
            return Fraction(n)
        return self._memo(("n", n), lambda: (self.q ** n - self.q ** -n) / (self.q - 1 / self.q))

    def qfact(self, n: int) -> Fraction:
        if n < 0:
            raise DomainError(f"q-factorial of negative integer {n}")
        def compute():
            out = Fraction(1)
            for k in range(2, n + 1):
                out *= self.qnum(k)
            return out
        return self._memo(("!", n), compute)

    def qbinom(self, n: int, k: int) -> Fraction:
        if k < 0 or k > n or n < 0:
            return Fraction(0)
        return self.qfact(n) / (self.qfact(k) * self.qfact(n - k))

    # -------------------------------------------------------- F and Phi
    def series_F(self, n: int) -> Fraction:
        """F(n) = [1] + ... + [n]."""
        if n < 1:
            raise DomainError("series F needs n >= 1")
        return self._memo(("F", n), lambda: sum((self.qnum(k) for k in range(1, n + 1)), Fraction(0)))

    def series_Phi(self, n: int) -> Fraction:
        """Phi(n) = [2] F(n) / ([n+1][n]); equals 1 at q = 1."""
        if n < 1:
            raise DomainError("series Phi needs n >= 1")
        if self.classical:
            return Fraction(1)
        return self._memo(("Phi", n), lambda: self.qnum(2) * self.series_F(n) / (self.qnum(n + 1) * self.qnum(n)))

    def phi_factorial(self, n: int) -> Fraction:
        """Phi(n)! = Phi(n) Phi(n-1) ... Phi(1), with Phi(0)! = 1."""
        if n < 0:
            raise DomainError("Phi factorial needs n >= 0")
        out = Fraction(1)
        for k in range(1, n + 1):
            out *= self.series_Phi(k)
        return out

    def gamma_q_squared(self, kappa) -> Fraction:
        """(gamma_kappa / c0)^2 = ([2k+1][2k]/[2]) Phi(2k)^2."""
        k2 = twice(kappa)
        if k2 < 1:
            raise DomainError("gamma is defined for kappa >= 1/2")
        return self.qnum(k2 + 1) * self.qnum(k2) / self.qnum(2) * self.series_Phi(k2) ** 2

    # ------------------------------------------------------------ omega
    def omega_rec(self, p: int, lam, kappa) -> Fraction:
        """omega_p^{lam,kappa} from its q-binomial weighted recursion (lam = inf)."""
        l2, k2 = twice(lam), twice(kappa)
        if l2 > k2:
            raise DomainError("omega recursion requires lambda <= kappa")
        if not 0 <= p <= l2:
            raise DomainError(f"need 0 <= p <= 2 lambda, got p={p}")
        return self._omega_rec(p, l2, k2)

    def _omega_rec(self, p, l2, k2):
        if p == 0 or self.classical:
            return Fraction(1)
        def compute():
            total = self.series_Phi(k2) * self.qbinom(l2 - 1, p - 1) * self._omega_rec(p - 1, l2 - 1, k2 - 1)
            if p <= l2 - 1:
                total += self.qbinom(l2 - 1, p) * self._omega_rec(p, l2 - 1, k2 + 1)
            return total / self.qbinom(l2, p)
        return self._memo(("w", p, l2, k2), compute)

    def omega_closed(self, p: int, lam, kappa) -> Fraction:
        """Nested product-of-sums form of omega, divided by the q-binomial."""
        l2, k2 = twice(lam), twice(kappa)
        if l2 > k2:
            raise DomainError("closed omega form requires lambda <= kappa")
        if not 1 <= p <= l2:
            raise DomainError(f"need 1 <= p <= 2 lambda, got p={p}")
        top = l2 - p
        # ways[m] accumulates the nested sums over m_1 <= ... <= m_l = m
        ways = {0: Fraction(1)}
        for l in range(p):
            nxt = {}
            running = Fraction(0)
            for m in range(top + 1):
                running += ways.get(m, 0)
                if running:
                    nxt[m] = running * self.series_Phi(k2 + m - l)
            ways = nxt
        return sum(ways.values(), Fraction(0)) / self.qbinom(l2, p)

    def omega_sym(self, a, b, c) -> Fraction:
        """omega^{a,b}_{a+b-c}, symmetric in (a, b)."""
        a2, b2, c2 = twice(a), twice(b), twice(c)
        p = (a2 + b2 - c2) // 2
        return self._omega_rec(p, min(a2, b2), max(a2, b2))

    # --------------------------------------------------- triangles, 6-j
    def delta_q_squared(self, a, b, c) -> Fraction:
        a2, b2, c2 = twice(a), twice(b), twice(c)
        if not is_triangle(a2, b2, c2):
            raise DomainError(f"su(2) triangle rule fails for ({a2}, {b2}, {c2})")
        s = (a2 + b2 + c2) // 2
        return self.qfact(s - c2) * self.qfact(s - b2) * self.qfact(s - a2) / self.qfact(s + 1)

    def nabla_q(self, a, b, c) -> ExactValue:
        return ExactValue.from_sqrt(1 / self.delta_q_squared(a, b, c))

    def _sixj_parts(self, a2, b2, c2, d2, e2, f2):
        def compute():
            if not (is_triangle(a2, b2, c2) and is_triangle(a2, e2, f2)
                    and is_triangle(d2, b2, f2) and is_triangle(d2, e2, c2)):
                return Fraction(0), Fraction(1)
            dsq = (self.delta_q_squared(a2, b2, c2) * self.delta_q_squared(a2, e2, f2)
                   * self.delta_q_squared(d2, b2, f2) * self.delta_q_squared(d2, e2, c2))
            return su2.racah_sum(a2, b2, c2, d2, e2, f2, fact=self.qfact), dsq
        return self._memo(("6j", a2, b2, c2, d2, e2, f2), compute)

    def q_sixj(self, a, b, c, d, e, f) -> ExactValue:
        """q-6-j symbol from the q-Racah single-sum formula."""
        s, dsq = self._sixj_parts(*map(twice, (a, b, c, d, e, f)))
        return ExactValue.make(s, dsq)


def q_sum_rule_sides(a, b, c, d, e, ctx: QContext) -> tuple[Fraction, Fraction]:
    """Both sides of the q-triangle sum rule after multiplying by delta_q(abc) delta_q(cde)."""
    a2, b2, c2, d2, e2 = map(twice, (a, b, c, d, e))
    if not (is_triangle(a2, b2, c2) and is_triangle(c2, d2, e2)):
        raise DomainError("triads (abc) and (cde) must be su(2) triangles")
    lhs = ctx.omega_sym(a2, b2, c2) * ctx.omega_sym(c2, d2, e2)
    total = Fraction(0)
    for f2 in triangle_range(b2, d2):
        if not is_triangle(a2, f2, e2):
            continue
        s, _ = ctx._sixj_parts(a2, b2, c2, d2, e2, f2)
        total += ctx.omega_sym(b2, d2, f2) * ctx.omega_sym(a2, f2, e2) * s
    weight = ctx.delta_q_squared(a2, b2, c2) * ctx.delta_q_squared(c2, d2, e2)
    rhs = sign_of_power((a2 + b2 + d2 + e2) // 2) * ctx.qnum(c2 + 1) * weight * total
    return lhs, rhs


def check_q_sum_rule(a, b, c, d, e, ctx: QContext) -> Fraction:
    """Exact residual (left minus right) of the q-triangle sum rule."""
    lhs, rhs = q_sum_rule_sides(a, b, c, d, e, ctx)
    return lhs - rhs
