"""Reduced matrix elements of S^(1/2) and S^1 for osp(1|2), their identities,
phase classes of the off-diagonal elements, and generator conditions.

Values are kept symbolic in (d0, u, v) as :class:`SurdPoly` objects: a sum of
sqrt(k) * BiHomPoly over distinct squarefree k.  Off-diagonal elements of
S^(1/2) are square roots of +-gamma_j, so a :class:`ReducedElement` stores
``sign * factor * sqrt(root)`` with ``root`` a polynomial.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .exact import DomainError, ExactValue, SurdSum, sign_of_power, twice
from .osp import alpha, closure_unified, gamma_osp
from .poly import BiHomPoly, ONE, U, V
from .reports import VerificationReport
from .su2 import closure_coeff_su2

__all__ = [
    "SurdPoly",
    "PhaseClass",
    "ReducedElement",
    "rme_S_half",
    "rme_S_one",
    "identity_suite_A",
    "generator_conditions",
]


class SurdPoly:
    """Finite sum of sqrt(radicand) * polynomial, radicands squarefree."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms: dict[int, BiHomPoly] = {}
        for k, p in (terms or {}).items():
            self._add_term(k, p)

    @classmethod
    def of(cls, scalar: ExactValue, poly: BiHomPoly = ONE) -> "SurdPoly":
        return cls({scalar.radicand: poly * scalar.coeff})

    def _add_term(self, radicand: int, poly: BiHomPoly):
        if poly.is_zero:
            return
        total = self.terms.get(radicand, BiHomPoly.zero()) + poly
        if total.is_zero:
            self.terms.pop(radicand, None)
        else:
            self.terms[radicand] = total

    def __add__(self, other: "SurdPoly") -> "SurdPoly":
        out = SurdPoly(self.terms)
        for k, p in other.terms.items():
            out._add_term(k, p)
        return out

    def __neg__(self):
        return SurdPoly({k: -p for k, p in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, ExactValue):
            other = SurdPoly.of(other)
        elif isinstance(other, BiHomPoly):
            other = SurdPoly({1: other})
        elif isinstance(other, (int, Fraction)):
            other = SurdPoly.of(ExactValue.rational(other))
        out = SurdPoly()
        for k1, p1 in self.terms.items():
            for k2, p2 in other.terms.items():
                root = ExactValue.from_sqrt(k1) * ExactValue.from_sqrt(k2)
                out._add_term(root.radicand, p1 * p2 * root.coeff)
        return out

    __rmul__ = __mul__

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, SurdPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def evaluate(self, c0, d0) -> ExactValue:
        acc = SurdSum()
        for k, p in self.terms.items():
            acc += ExactValue.make(p.evaluate(c0, d0), k)
        return acc.as_exact()

    def render(self) -> str:
        if not self.terms:
            return "0"
        parts = [p.render(radicand=k) for k, p in sorted(self.terms.items())]
        return " + ".join(parts).replace("+ -", "- ")

    __str__ = render
    __repr__ = render


@dataclass(frozen=True)
class PhaseClass:
    """Signs (-1)^eps_r of (j||S||j-1/2) and (-1)^eps_l of (j-1/2||S||j)."""

    eps_r: int = 1
    eps_l: int = 0

    def __post_init__(self):
        if self.eps_r not in (0, 1) or self.eps_l not in (0, 1):
            raise DomainError("phase bits must be 0 or 1")

    @property
    def odd(self) -> bool:
        return (self.eps_r + self.eps_l) % 2 == 1

    def admissible(self, c0, d0) -> bool | None:
        """Whether this class can give real elements at (c0, d0).

        c0 > 0 makes every gamma positive and requires eps_r + eps_l odd;
        c0 + d0^2 < 0 makes every gamma negative and requires it even.
        Returns None outside both regimes, where no rule is stated.
        """
        c0, d0 = Fraction(c0), Fraction(d0)
        if c0 > 0:
            return self.odd
        if c0 + d0 * d0 < 0:
            return not self.odd
        return None


@dataclass(frozen=True)
class ReducedElement:
    """(bra || S^rank || ket) = sign * factor * sqrt(root)."""

    bra_j: int
    ket_j: int
    op_rank: int
    factor: SurdPoly
    root: BiHomPoly = field(default=ONE)
    sign: int = 1

    @property
    def is_zero(self) -> bool:
        return self.factor.is_zero or self.root.is_zero

    def evaluate(self, c0, d0) -> ExactValue:
        """Exact value at rational (c0, d0); the root must be non-negative there."""
        under = self.root.evaluate(c0, d0)
        if under < 0:
            raise DomainError("phase class gives an imaginary element at this point")
        return self.factor.evaluate(c0, d0) * ExactValue.from_sqrt(under) * self.sign

    def times(self, other: "ReducedElement", op_rank: int) -> "ReducedElement":
        """Product of two elements as a new symbolic element."""
        factor = self.factor * other.factor
        if self.root == other.root:
            # sqrt(r) sqrt(r) = r in the regime where the elements are real
            return ReducedElement(self.bra_j, other.ket_j, op_rank, factor * self.root, ONE,
                                  self.sign * other.sign)
        return ReducedElement(self.bra_j, other.ket_j, op_rank, factor,
                              self.root * other.root, self.sign * other.sign)

    def squared_value(self) -> SurdPoly:
        """value^2 as a polynomial expression (no outer square root)."""
        return self.factor * self.factor * self.root

    def render(self) -> str:
        if self.is_zero:
            return "0"
        pieces = []
        if self.factor != SurdPoly({1: ONE}) or self.root == ONE:
            text = self.factor.render()
            pieces.append(f"({text})" if len(self.factor.terms) > 1 else text)
        if self.root != ONE:
            pieces.append(f"sqrt({self.root.render()})")
        text = "*".join(pieces)
        if self.sign < 0:
            text = text[1:] if text.startswith("-") else "-" + text
        return text


def _alpha_poly(j2: int) -> SurdPoly:
    return SurdPoly.of(alpha(j2), BiHomPoly((1,), d0=1))


def rme_S_half(j, jp, phase: PhaseClass = PhaseClass()) -> ReducedElement:
    """(j || S^(1/2) || jp); off-diagonal signs follow the phase class."""
    j2, jp2 = twice(j), twice(jp)
    if abs(j2 - jp2) > 1:
        raise DomainError(f"S^(1/2) connects only |j - j'| <= 1/2, got twice-values {j2}, {jp2}")
    if j2 == jp2:
        if j2 == 0:
            return ReducedElement(0, 0, 1, SurdPoly())
        return ReducedElement(j2, jp2, 1, _alpha_poly(j2))
    upper = max(j2, jp2)
    # product of the pair is -gamma_upper, so root = -(-1)^(eps_r+eps_l) gamma
    root = gamma_osp(upper) * (1 if phase.odd else -1)
    eps = phase.eps_r if j2 > jp2 else phase.eps_l
    return ReducedElement(j2, jp2, 1, SurdPoly({1: ONE}), root, sign_of_power(eps))


def rme_S_one(j, jp, phase: PhaseClass = PhaseClass()) -> ReducedElement:
    """(j || S^1 || jp) built from S^(1/2) elements."""
    j2, jp2 = twice(j), twice(jp)
    if abs(j2 - jp2) > 2:
        raise DomainError(f"S^1 connects only |j - j'| <= 1, got twice-values {j2}, {jp2}")
    if j2 == jp2:
        coeff = ExactValue.from_sqrt(2) * ExactValue.from_sqrt(j2 * (j2 + 1)) * -1
        return ReducedElement(j2, j2, 2, SurdPoly.of(coeff, U))
    mid = (j2 + jp2) // 2 if abs(j2 - jp2) == 2 else None
    if mid is not None:
        return rme_S_half(j2, mid, phase).times(rme_S_half(mid, jp2, phase), 2)
    upper = max(j2, jp2)
    half = rme_S_half(j2, jp2, phase)
    if upper % 2 == 1:
        return ReducedElement(j2, jp2, 2, SurdPoly(), half.root, half.sign)
    # tau_(j - 1/2) = 1 for integral upper spin j
    coeff = ExactValue.from_sqrt(Fraction(2, (upper - 1) * (upper + 1))) * -1
    return ReducedElement(j2, jp2, 2, half.factor * SurdPoly.of(coeff, BiHomPoly((1,), d0=1)),
                          half.root, half.sign)


def identity_suite_A(j_bound: int) -> VerificationReport:
    """Symbolic checks of the alpha/gamma identities for 1 <= 2j <= j_bound."""
    rep = VerificationReport("identities-A", {"j_bound": j_bound})
    c0 = U - V
    d0 = BiHomPoly((1,), d0=1)
    for j2 in range(1, j_bound + 1):
        a_sq = _alpha_poly(j2) * _alpha_poly(j2)
        g_j, g_next = SurdPoly({1: gamma_osp(j2)}), SurdPoly({1: gamma_osp(j2 + 1)})
        lhs = SurdPoly({1: c0}) + a_sq
        rep.record(lhs == g_next - g_j,
                   {"identity": "c0 + alpha_j^2 = gamma_(j+1/2) - gamma_j", "twice_j": j2,
                    "lhs": lhs.render(), "rhs": (g_next - g_j).render()})
        lhs = g_j * (j2 + 1) + a_sq + g_next * j2
        rhs = SurdPoly({1: U * (2 * j2 * (j2 + 1))})
        rep.record(lhs == rhs, {"identity": "(2j+1) gamma_j + alpha_j^2 + 2j gamma_(j+1/2) = 4j(2j+1) u",
                                "twice_j": j2, "lhs": lhs.render(), "rhs": rhs.render()})
        # gamma in terms of alpha and c0
        lhs = a_sq * (j2 + sign_of_power(j2)) + SurdPoly({1: c0 * j2})
        rep.record(lhs == g_j, {"identity": "gamma_j = (2j + (-1)^(2j)) alpha_j^2 + 2j c0",
                                "twice_j": j2, "lhs": lhs.render(), "rhs": g_j.render()})
        if j2 >= 2:
            tau_prev = (j2 - 1) % 2
            lhs = (_alpha_poly(j2 - 1) * ExactValue.from_sqrt(Fraction(j2 + 1, j2))
                   + _alpha_poly(j2) * ExactValue.from_sqrt(Fraction(j2 - 1, j2)))
            rhs = SurdPoly.of(ExactValue.from_sqrt(Fraction(4, (j2 - 1) * (j2 + 1))) * tau_prev, d0)
            rep.record(lhs == rhs, {"identity": "alpha combination with tau_(j-1/2)", "twice_j": j2,
                                    "lhs": lhs.render(), "rhs": rhs.render()})
            # alpha recursion, exactly and squared
            left = alpha(j2) * (j2 + sign_of_power(j2))
            right = alpha(j2 - 1) * ExactValue.from_sqrt((j2 + 1) * (j2 - 1)) * -1
            rep.record(left == right, {"identity": "alpha recursion", "twice_j": j2,
                                       "lhs": left.render(), "rhs": right.render()})
            rep.record(left.square() == right.square(), {"identity": "alpha recursion squared", "twice_j": j2})
    return rep


def generator_conditions() -> VerificationReport:
    """Solve the [S^1 x S^1]^1 closure against the generator structure constants."""
    rep = VerificationReport("generator-conditions")
    # su(2): [S^1 x S^1]^1 = c0^n m S^1 must equal -(1/sqrt 2) S^1
    n, m = closure_coeff_su2(2, 2, 2)
    target = ExactValue.from_sqrt(Fraction(1, 2)) * -1
    c0 = target / m if n == 1 else None
    rep.record(c0 == ExactValue.rational(Fraction(-1, 4)),
               {"algebra": "su2", "c0": c0.render() if c0 else None, "expected": "-1/4"})
    # osp(1|2): [S^1 x S^1]^1 = k u S^1 must equal -(1/2) sqrt(3/2) S^1
    closure = closure_unified(2, 2, 2)
    radicand, poly = closure.canonical()
    ok_shape = poly.d0 == 0 and poly.coeffs[:1] != () and len(poly.coeffs) == 2 and poly.coeffs[1] == 0
    u_value = None
    if ok_shape:
        coeff = ExactValue.make(poly.coeffs[0], radicand)
        u_value = ExactValue.from_sqrt(Fraction(3, 2)) * Fraction(-1, 2) / coeff
    expected = ExactValue.from_sqrt(Fraction(1, 2)) * Fraction(-1, 4)
    rep.record(u_value == expected, {"algebra": "osp12", "closure": closure.render(),
                                     "u": u_value.render() if u_value else None,
                                     "expected": expected.render()})
    return rep
