"""Homogeneous polynomials in u = c0 + d0^2 and v = d0^2, optionally times d0.

A :class:`BiHomPoly` of degree n stores x_0..x_n, the coefficients of
u^(n-m) v^m, together with a flag telling whether the whole polynomial is
multiplied by d0.  Products of two d0-flagged polynomials absorb d0^2 = v.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Iterable, Sequence

__all__ = ["BiHomPoly", "ZERO", "ONE", "U", "V", "D0"]


class BiHomPoly:
    __slots__ = ("d0", "coeffs")

    def __init__(self, coeffs: Iterable, d0: int = 0):
        self.coeffs: tuple[Fraction, ...] = tuple(Fraction(c) for c in coeffs)
        self.d0 = int(d0)
        if self.d0 not in (0, 1):
            raise ValueError("d0 flag must be 0 or 1")

    # ------------------------------------------------------ constructors
    @staticmethod
    def zero() -> "BiHomPoly":
        return BiHomPoly(())

    @staticmethod
    def const(x) -> "BiHomPoly":
        return BiHomPoly((x,))

    @staticmethod
    def linear(u_coeff, v_coeff) -> "BiHomPoly":
        """u_coeff * u + v_coeff * v."""
        return BiHomPoly((u_coeff, v_coeff))

    # -------------------------------------------------------- properties
    @property
    def is_zero(self) -> bool:
        return not any(self.coeffs)

    @property
    def degree(self) -> int:
        """Degree in (u, v); -1 for the zero polynomial."""
        return len(self.coeffs) - 1 if not self.is_zero else -1

    def coeff(self, m: int) -> Fraction:
        if 0 <= m < len(self.coeffs):
            return self.coeffs[m]
        return Fraction(0)

    def padded(self, degree: int) -> tuple[Fraction, ...]:
        """Coefficient list for the given degree (zero polynomial pads freely)."""
        if self.is_zero:
            return (Fraction(0),) * (degree + 1)
        if degree != len(self.coeffs) - 1:
            raise ValueError(f"polynomial has degree {len(self.coeffs) - 1}, not {degree}")
        return self.coeffs

    # -------------------------------------------------------- arithmetic
    def __add__(self, other: "BiHomPoly") -> "BiHomPoly":
        if not isinstance(other, BiHomPoly):
            return NotImplemented
        if other.is_zero:
            return self
        if self.is_zero:
            return other
        if self.d0 != other.d0 or len(self.coeffs) != len(other.coeffs):
            raise ValueError("adding polynomials of different degree or d0 parity")
        return BiHomPoly((a + b for a, b in zip(self.coeffs, other.coeffs)), self.d0)

    def __neg__(self):
        return BiHomPoly((-c for c in self.coeffs), self.d0)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return BiHomPoly.zero()
            return BiHomPoly((c * other for c in self.coeffs), self.d0)
        if not isinstance(other, BiHomPoly):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return BiHomPoly.zero()
        a, b = self.coeffs, other.coeffs
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        flag = self.d0 + other.d0
        if flag == 2:
            return BiHomPoly([Fraction(0)] + out, 0)  # d0^2 = v
        return BiHomPoly(out, flag)

    __rmul__ = __mul__

    def times_d0(self) -> "BiHomPoly":
        if self.is_zero:
            return self
        if self.d0:
            return BiHomPoly((Fraction(0),) + self.coeffs, 0)
        return BiHomPoly(self.coeffs, 1)

    def strip_d0(self) -> "BiHomPoly":
        """The same coefficients without the d0 prefactor."""
        return BiHomPoly(self.coeffs, 0)

    def __eq__(self, other):
        if not isinstance(other, BiHomPoly):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return self.is_zero and other.is_zero
        return self.d0 == other.d0 and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.d0, self.coeffs)) if not self.is_zero else 0

    # ------------------------------------------------------- evaluation
    def evaluate(self, c0, d0):
        """Numeric value at exact (c0, d0)."""
        c0, d0 = Fraction(c0), Fraction(d0)
        u, v = c0 + d0 * d0, d0 * d0
        n = len(self.coeffs) - 1
        total = sum((c * u ** (n - m) * v ** m for m, c in enumerate(self.coeffs)), Fraction(0))
        return total * d0 if self.d0 else total

    def in_c0_basis(self) -> dict[tuple[int, int], Fraction]:
        """Coefficients of c0^i (d0^2)^j after substituting u = c0 + d0^2."""
        out: dict[tuple[int, int], Fraction] = {}
        n = len(self.coeffs) - 1
        for m, c in enumerate(self.coeffs):
            if not c:
                continue
            k = n - m  # u^k v^m = sum_i C(k,i) c0^i v^(k-i+m)
            for i in range(k + 1):
                key = (i, k - i + m)
                out[key] = out.get(key, Fraction(0)) + c * comb(k, i)
        return {k: c for k, c in out.items() if c}

    # --------------------------------------------------------- rendering
    def render(self, basis: str = "uv", radicand: int = 1) -> str:
        """Exact text form; ``radicand`` folds an overall sqrt factor into the output."""
        if self.is_zero:
            return "0"
        n = len(self.coeffs) - 1
        if basis == "uv":
            terms = [(c, _monomial(("u", n - m), ("v", m))) for m, c in enumerate(self.coeffs) if c]
        elif basis == "c0":
            items = sorted(self.in_c0_basis().items(), key=lambda kv: (-kv[0][0], kv[0][1]))
            terms = [(c, _monomial(("c0", i), ("d0^2", j))) for (i, j), c in items]
        else:
            raise ValueError(f"unknown basis {basis!r}")
        prefix = ([f"sqrt({radicand})"] if radicand != 1 else []) + (["d0"] if self.d0 else [])
        if len(terms) == 1:
            c, mono = terms[0]
            mag = abs(c)
            factors = ([_fmt(mag)] if mag != 1 or not (prefix or mono) else []) + prefix + ([mono] if mono else [])
            return ("-" if c < 0 else "") + "*".join(factors)
        body = _join_terms(terms)
        return "*".join(prefix + [f"({body})"]) if prefix else body

    def __repr__(self):
        return f"BiHomPoly({self.render()})"

    __str__ = render


def _monomial(*parts) -> str:
    pieces = []
    for name, power in parts:
        if power == 1:
            pieces.append(name)
        elif power > 1:
            pieces.append(f"{name}^{power}" if "^" not in name else f"({name})^{power}")
    return "*".join(pieces)


def _fmt(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _join_terms(terms: Sequence[tuple[Fraction, str]]) -> str:
    out = ""
    for i, (c, mono) in enumerate(terms):
        mag = abs(c)
        if mono:
            text = mono if mag == 1 else f"{_fmt(mag)}*{mono}"
        else:
            text = _fmt(mag)
        if i == 0:
            out = ("-" if c < 0 else "") + text
        else:
            out += (" - " if c < 0 else " + ") + text
    return out


ZERO = BiHomPoly.zero()
ONE = BiHomPoly.const(1)
U = BiHomPoly.linear(1, 0)
V = BiHomPoly.linear(0, 1)
D0 = BiHomPoly((1,), d0=1)
