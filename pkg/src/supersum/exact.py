"""Exact arithmetic substrate.

Spins are carried as their twice-values (plain non-negative ints) so that
expressions such as ``2*kappa`` or ``2*lam + 2*kappa - p`` are integers.
Square roots are handled by :class:`ExactValue`, a rational multiple of the
square root of a squarefree integer, which is closed under multiplication.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction
from functools import lru_cache
from typing import Union

import sympy

__all__ = [
    "DomainError",
    "IncompatibleSurdError",
    "Spin",
    "twice",
    "tau",
    "phase_two_kappa",
    "integral_part",
    "exact_factorials",
    "factorial",
    "double_factorial",
    "ExactValue",
    "SurdSum",
    "surd_mul",
    "surd_try_add",
    "is_triangle",
    "triangle_range",
    "ParityCase",
    "parity_case",
    "sign_of_power",
]


class DomainError(ValueError):
    """An argument lies outside the domain of the requested quantity."""


class IncompatibleSurdError(ArithmeticError):
    """Raised when adding surds whose canonical radicands differ.

    Callers should regroup the expression (for example multiply through by a
    common triangle factor) or switch to :class:`SurdSum` / decimal mode.
    """


# ---------------------------------------------------------------- spins

@dataclass(frozen=True, order=True)
class Spin:
    """A half-integer spin stored as its twice-value."""

    twice: int

    def __post_init__(self):
        if not isinstance(self.twice, int) or self.twice < 0:
            raise DomainError(f"spin twice-value must be a non-negative int, got {self.twice!r}")

    @classmethod
    def parse(cls, text: str) -> "Spin":
        """Parse ``"3/2"``, ``"1"`` or ``"0.5"`` into a spin."""
        value = Fraction(text.strip())
        doubled = 2 * value
        if doubled.denominator != 1 or doubled < 0:
            raise DomainError(f"not a non-negative half-integer: {text!r}")
        return cls(int(doubled))

    @property
    def value(self) -> Fraction:
        return Fraction(self.twice, 2)

    @property
    def tau(self) -> int:
        return self.twice % 2

    def __str__(self) -> str:
        return str(self.twice // 2) if self.twice % 2 == 0 else f"{self.twice}/2"


SpinLike = Union[int, Spin]


def twice(s: SpinLike) -> int:
    """Return the twice-value of a :class:`Spin` or pass an int through unchanged."""
    if isinstance(s, Spin):
        return s.twice
    if isinstance(s, bool) or not isinstance(s, int):
        raise DomainError(f"expected a twice-value int or Spin, got {s!r}")
    return s


def tau(s: SpinLike) -> int:
    """Parity indicator: 0 for integral spins, 1 for half-integral ones."""
    return twice(s) % 2


def phase_two_kappa(s: SpinLike) -> int:
    """(-1)^(2 kappa)."""
    return 1 - 2 * tau(s)


def integral_part(x2: int) -> int:
    """Integral part [x] of the half-integer x = x2/2 (floor, also for negatives)."""
    return x2 // 2


def sign_of_power(exponent: int) -> int:
    return -1 if exponent % 2 else 1


# ------------------------------------------------------------ factorials

@lru_cache(maxsize=None)
def factorial(n: int) -> int:
    if n < 0:
        raise DomainError(f"factorial of negative integer {n}")
    return math.factorial(n)


@lru_cache(maxsize=None)
def double_factorial(n: int) -> int:
    if n < -1:
        raise DomainError(f"double factorial needs n >= -1, got {n}")
    out = 1
    while n > 1:
        out *= n
        n -= 2
    return out


def exact_factorials(n: int, kind: str = "single") -> int:
    """Exact factorial (``kind='single'``) or double factorial (``kind='double'``)."""
    if kind == "single":
        return factorial(n)
    if kind == "double":
        return double_factorial(n)
    raise DomainError(f"unknown factorial kind {kind!r}")


# ----------------------------------------------------------------- surds

_SMALL_PRIMES = tuple(int(p) for p in sympy.primerange(2, 1000))


@lru_cache(maxsize=65536)
def _square_split(n: int) -> tuple[int, int]:
    """Write n = s**2 * k with k squarefree; return (s, k)."""
    if n == 0:
        return 0, 1
    s, k = 1, 1
    for p in _SMALL_PRIMES:
        if n == 1:
            break
        if p * p > n:
            break
        if n % p:
            continue
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        s *= p ** (e // 2)
        if e % 2:
            k *= p
    if n > 1:
        r = math.isqrt(n)
        if r * r == n:
            s *= r
        elif n < 1_000_000:
            k *= n  # no prime factor below 1000 and n < 1000**2: n is prime
        else:
            for p, e in sympy.factorint(n).items():
                p, e = int(p), int(e)
                s *= p ** (e // 2)
                if e % 2:
                    k *= p
    return s, k


Number = Union[int, Fraction]


@dataclass(frozen=True)
class ExactValue:
    """The exact number ``coeff * sqrt(radicand)``.

    ``radicand`` is always a squarefree positive integer (1 for rationals)
    and zero is stored as ``ExactValue(0, 1)``.  Use :meth:`from_sqrt` or
    :meth:`make` to build values from arbitrary rational radicands.
    """

    coeff: Fraction
    radicand: int = 1

    @staticmethod
    def make(coeff: Number, radicand: Number = 1) -> "ExactValue":
        coeff = Fraction(coeff)
        radicand = Fraction(radicand)
        if radicand < 0:
            raise DomainError("negative radicand")
        if coeff == 0 or radicand == 0:
            return ExactValue(Fraction(0), 1)
        num, den = radicand.numerator, radicand.denominator
        s, k = _square_split(num * den)
        return ExactValue(coeff * Fraction(s, den), k)

    @staticmethod
    def from_sqrt(radicand: Number) -> "ExactValue":
        return ExactValue.make(1, radicand)

    @staticmethod
    def rational(x: Number) -> "ExactValue":
        return ExactValue(Fraction(x), 1)

    # -- predicates
    @property
    def is_rational(self) -> bool:
        return self.radicand == 1 or self.coeff == 0

    @property
    def is_zero(self) -> bool:
        return self.coeff == 0

    def square(self) -> Fraction:
        return self.coeff * self.coeff * self.radicand

    def sign(self) -> int:
        return (self.coeff > 0) - (self.coeff < 0)

    # -- arithmetic
    def __mul__(self, other):
        if isinstance(other, ExactValue):
            if self.radicand == other.radicand:
                return ExactValue.make(self.coeff * other.coeff * self.radicand)
            g = math.gcd(self.radicand, other.radicand)
            return ExactValue.make(self.coeff * other.coeff * g, (self.radicand // g) * (other.radicand // g))
        if isinstance(other, (int, Fraction)):
            return ExactValue.make(self.coeff * other, self.radicand)
        return NotImplemented

    __rmul__ = __mul__

    def inverse(self) -> "ExactValue":
        if self.coeff == 0:
            raise ZeroDivisionError("inverse of zero")
        return ExactValue.make(1 / (self.coeff * self.radicand), self.radicand)

    def __truediv__(self, other):
        if isinstance(other, ExactValue):
            return self * other.inverse()
        if isinstance(other, (int, Fraction)):
            return ExactValue.make(self.coeff / Fraction(other), self.radicand)
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.inverse() * other
        return NotImplemented

    def __neg__(self):
        return ExactValue(-self.coeff, self.radicand)

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = ExactValue.rational(other)
        if not isinstance(other, ExactValue):
            return NotImplemented
        if other.coeff == 0:
            return self
        if self.coeff == 0:
            return other
        if self.radicand != other.radicand:
            raise IncompatibleSurdError(f"cannot add sqrt({self.radicand}) and sqrt({other.radicand}) exactly")
        return ExactValue.make(self.coeff + other.coeff, self.radicand)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-other)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.radicand == 1 and self.coeff == other or (self.coeff == 0 and other == 0)
        if isinstance(other, ExactValue):
            return self.coeff == other.coeff and (self.radicand == other.radicand or self.coeff == 0)
        return NotImplemented

    def __hash__(self):
        return hash((self.coeff, self.radicand))

    # -- conversions
    def to_decimal(self, precision: int = 60) -> Decimal:
        with localcontext() as ctx:
            ctx.prec = precision + 10
            val = Decimal(self.coeff.numerator) / Decimal(self.coeff.denominator)
            if self.radicand != 1:
                val *= Decimal(self.radicand).sqrt()
            ctx.prec = precision
            return +val

    def __float__(self):
        return float(self.coeff) * math.sqrt(self.radicand)

    def render(self) -> str:
        """Render in the table grammar: ``r``, ``r/s``, ``sqrt(p)``, ``r/s*sqrt(p)``."""
        if self.radicand == 1 or self.coeff == 0:
            return _render_fraction(self.coeff)
        root = f"sqrt({self.radicand})"
        if self.coeff == 1:
            return root
        if self.coeff == -1:
            return "-" + root
        return f"{_render_fraction(self.coeff)}*{root}"

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"ExactValue({self.render()})"


def _render_fraction(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def surd_mul(x: ExactValue, y: ExactValue) -> ExactValue:
    return x * y


def surd_try_add(x: ExactValue, y: ExactValue) -> ExactValue:
    """Add two surds; raises :class:`IncompatibleSurdError` on unlike radicands."""
    return x + y


class SurdSum:
    """Exact sum of surds grouped by squarefree radicand.

    Square roots of distinct squarefree integers are linearly independent
    over the rationals, so the sum is zero exactly when every group is.
    """

    __slots__ = ("terms",)

    def __init__(self, items=()):
        self.terms: dict[int, Fraction] = {}
        for item in items:
            self.add(item)

    def add(self, x) -> "SurdSum":
        if isinstance(x, SurdSum):
            for r, c in x.terms.items():
                self._acc(r, c)
            return self
        if isinstance(x, (int, Fraction)):
            x = ExactValue.rational(x)
        if x.coeff != 0:
            self._acc(x.radicand, x.coeff)
        return self

    def _acc(self, r, c):
        new = self.terms.get(r, Fraction(0)) + c
        if new == 0:
            self.terms.pop(r, None)
        else:
            self.terms[r] = new

    def __iadd__(self, x):
        return self.add(x)

    def __isub__(self, x):
        if isinstance(x, SurdSum):
            for r, c in x.terms.items():
                self._acc(r, -c)
            return self
        if isinstance(x, (int, Fraction)):
            x = ExactValue.rational(x)
        return self.add(-x)

    def scaled(self, k) -> "SurdSum":
        """Multiply every term by an ExactValue or rational."""
        out = SurdSum()
        for r, c in self.terms.items():
            out.add(ExactValue(c, r) * k)
        return out

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def as_exact(self) -> ExactValue:
        """Collapse to a single surd; raises if several radicands remain."""
        if not self.terms:
            return ExactValue.rational(0)
        if len(self.terms) > 1:
            raise IncompatibleSurdError(f"sum has {len(self.terms)} unlike radicands")
        (r, c), = self.terms.items()
        return ExactValue(c, r)

    def to_decimal(self, precision: int = 60) -> Decimal:
        with localcontext() as ctx:
            ctx.prec = precision + 10
            total = Decimal(0)
            for r, c in sorted(self.terms.items()):
                total += ExactValue(c, r).to_decimal(precision + 10)
            ctx.prec = precision
            return +total

    def render(self) -> str:
        if not self.terms:
            return "0"
        parts = [ExactValue(c, r).render() for r, c in sorted(self.terms.items())]
        out = parts[0]
        for p in parts[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out

    def __eq__(self, other):
        if isinstance(other, SurdSum):
            return self.terms == other.terms
        return NotImplemented

    def __repr__(self):
        return f"SurdSum({self.render()})"


# ------------------------------------------------------------- triangles

def is_triangle(a: SpinLike, b: SpinLike, c: SpinLike, algebra: str = "su2") -> bool:
    a2, b2, c2 = twice(a), twice(b), twice(c)
    if not (abs(a2 - b2) <= c2 <= a2 + b2):
        return False
    if algebra == "su2":
        return (a2 + b2 + c2) % 2 == 0
    if algebra == "osp":
        return True
    raise DomainError(f"unknown algebra {algebra!r}")


def triangle_range(a2: int, b2: int, algebra: str = "su2") -> range:
    """Twice-values c with (a, b, c) a triangle, ascending."""
    step = 2 if algebra == "su2" else 1
    return range(abs(a2 - b2), a2 + b2 + 1, step)


class ParityCase:
    """Parity case tags for a pair (lambda, kappa)."""

    BOTH_INTEGRAL = "a"
    BOTH_HALF = "b"
    LAMBDA_HALF = "c"
    KAPPA_HALF = "d"


def parity_case(lam: SpinLike, kappa: SpinLike) -> str:
    """Return 'a' (both integral), 'b' (both half), 'c' (lambda half) or 'd' (kappa half)."""
    return {(0, 0): "a", (1, 1): "b", (1, 0): "c", (0, 1): "d"}[(tau(lam), tau(kappa))]
