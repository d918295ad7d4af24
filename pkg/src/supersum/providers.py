"""Sources of osp(1|2) 6-j^S values.

A provider maps six twice-spins (a, b, c, d, e, f) of {a b c; d e f}^S to an
exact :class:`ExactValue` or a :class:`decimal.Decimal`.  Missing entries
raise :class:`MissingEntryError`.  Providers only read shared state after
construction (lazy fills go through a lock), so they can be shared between
threads.

Kinds
-----
``TableProvider``      an in-memory dict.
``FileProvider``       a TSV table file (see :func:`parse_value`).
``SyntheticProvider``  random exact tables that satisfy the pseudo-orthogonality
                       relation family by family; a test harness, not physics.
``ExperimentalProvider``  graded recoupling of three irreps with
                       super-Clebsch-Gordan coefficients built as
                       |scalar factor| x su(2) CG, every sublevel phase +1.
                       Its phases are a local convention only.
"""

from __future__ import annotations

import random
import re
import threading
from decimal import Decimal, InvalidOperation
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Iterator, Union

from .exact import DomainError, ExactValue, SurdSum, sign_of_power
from .oracles import clebsch_gordan
from .osp import supertriangles
from .su2 import delta, nabla

__all__ = [
    "Value",
    "MissingEntryError",
    "SixJSuperProvider",
    "TableProvider",
    "FileProvider",
    "SyntheticProvider",
    "ExperimentalProvider",
    "parse_value",
    "format_value",
    "write_tsv",
    "osp_range",
    "family_ranges",
    "orthogonality_weight",
]

Value = Union[ExactValue, Decimal]
Key = tuple[int, int, int, int, int, int]


class MissingEntryError(KeyError):
    """A required 6-j^S value is absent from the provider."""


def osp_range(x2: int, y2: int) -> range:
    return range(abs(x2 - y2), x2 + y2 + 1)


def family_ranges(a2: int, b2: int, d2: int, e2: int) -> tuple[list[int], list[int]]:
    """Rows x and columns f of the family {a b x; d e f}^S, twice-values ascending."""
    rows = [x for x in osp_range(a2, b2) if abs(d2 - e2) <= x <= d2 + e2]
    cols = [f for f in osp_range(b2, d2) if abs(a2 - e2) <= f <= a2 + e2]
    return rows, cols


def orthogonality_weight(p2: int, q2: int, x2: int) -> int:
    """(-1)^([p+x] + [q+x] + 2x) for twice-values."""
    return sign_of_power((p2 + x2) // 2 + (q2 + x2) // 2 + x2)


# ---------------------------------------------------------------- values

_SURD = re.compile(r"^\s*([+-]?\d+(?:/\d+)?)?\s*\*?\s*sqrt\(\s*(\d+)(?:/(\d+))?\s*\)\s*$")
_RATIONAL = re.compile(r"^\s*[+-]?\d+(?:/\d+)?\s*$")


def parse_value(text: str) -> Value:
    """Parse ``r/s``, ``r/s*sqrt(p/q)``, ``sqrt(p)``, ``-sqrt(p)`` or a decimal."""
    raw = text.strip()
    if _RATIONAL.match(raw):
        return ExactValue.rational(Fraction(raw))
    sign = 1
    body = raw
    if body.startswith("-sqrt"):
        sign, body = -1, body[1:]
    m = _SURD.match(body)
    if m:
        coeff = Fraction(m.group(1)) if m.group(1) else Fraction(1)
        radicand = Fraction(int(m.group(2)), int(m.group(3) or 1))
        return ExactValue.from_sqrt(radicand) * (coeff * sign)
    try:
        return Decimal(raw)
    except InvalidOperation as exc:
        raise ValueError(f"cannot parse table value {text!r}") from exc


def format_value(value: Value) -> str:
    if isinstance(value, ExactValue):
        return value.render()
    return format(value, "f") if value == value.to_integral_value() else str(value)


def to_decimal(value, precision: int) -> Decimal:
    if isinstance(value, Decimal):
        return value
    if isinstance(value, SurdSum):
        return value.to_decimal(precision)
    if isinstance(value, (int, Fraction)):
        value = ExactValue.rational(value)
    return value.to_decimal(precision)


# ------------------------------------------------------------- providers

class SixJSuperProvider:
    """Base class: subclasses implement :meth:`_lookup`."""

    provenance = "abstract"
    canonical = False

    def value(self, a2: int, b2: int, c2: int, d2: int, e2: int, f2: int) -> Value:
        key = (a2, b2, c2, d2, e2, f2)
        found = self._lookup(key)
        if found is None:
            raise MissingEntryError(f"no 6-j^S value for twice-values {key}")
        return found

    def _lookup(self, key: Key) -> Value | None:
        raise NotImplementedError

    def has(self, key: Key) -> bool:
        try:
            return self._lookup(key) is not None
        except DomainError:
            return False

    def keys(self) -> Iterable[Key]:
        return ()

    def families(self) -> list[tuple[int, int, int, int]]:
        """(a, b, d, e) families with at least one stored entry."""
        return sorted({(k[0], k[1], k[3], k[4]) for k in self.keys()})


class TableProvider(SixJSuperProvider):
    provenance = "table"

    def __init__(self, table: dict[Key, Value] | None = None, provenance: str = "table"):
        self.table: dict[Key, Value] = dict(table or {})
        self.provenance = provenance

    def _lookup(self, key):
        return self.table.get(key)

    def keys(self):
        return self.table.keys()


class FileProvider(TableProvider):
    """TSV table: six twice-spin integers then a value; '#' starts a comment."""

    def __init__(self, path: str | Path):
        super().__init__(provenance="file")
        self.path = Path(path)
        for lineno, line in enumerate(self.path.read_text().splitlines(), 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            fields = line.split("\t") if "\t" in line else line.split()
            if len(fields) != 7:
                raise ValueError(f"{self.path}:{lineno}: expected 7 fields, got {len(fields)}")
            try:
                key = tuple(int(x) for x in fields[:6])
            except ValueError as exc:
                raise ValueError(f"{self.path}:{lineno}: spins must be twice-value integers") from exc
            if min(key) < 0:
                raise ValueError(f"{self.path}:{lineno}: negative spin")
            self.table[key] = parse_value(fields[6])


def write_tsv(provider: SixJSuperProvider, path: str | Path, keys: Iterable[Key] | None = None):
    keys = sorted(keys if keys is not None else provider.keys())
    lines = [f"# 6-j^S table, provenance: {provider.provenance}",
             "# a b c d e f (twice-values)\tvalue"]
    for key in keys:
        lines.append("\t".join(str(k) for k in key) + "\t" + format_value(provider.value(*key)))
    Path(path).write_text("\n".join(lines) + "\n")


class SyntheticProvider(SixJSuperProvider):
    """Exact rational tables satisfying the pseudo-orthogonality relation.

    For a family (a, b, d, e) with row weights s_x and column weights t_f
    the table M must obey M^T S M = T.  We pair columns with rows of equal
    weight, then apply a few indefinite Householder reflections
    H = I - 2 w w^T S / (w^T S w), each of which preserves S.  The seed
    fixes every family, so the table is reproducible.
    """

    provenance = "synthetic-orthogonal"

    def __init__(self, seed: int = 0, reflections: int = 2, flip_signs: bool = True):
        self.seed = seed
        self.reflections = reflections
        self.flip_signs = flip_signs
        self._families: dict[tuple[int, int, int, int], dict[Key, ExactValue]] = {}
        self._lock = threading.Lock()

    def _lookup(self, key):
        a2, b2, c2, d2, e2, f2 = key
        fam = self.family(a2, b2, d2, e2)
        return fam.get(key)

    def keys(self):
        with self._lock:
            return [k for fam in self._families.values() for k in fam]

    def family(self, a2: int, b2: int, d2: int, e2: int) -> dict[Key, ExactValue]:
        fid = (a2, b2, d2, e2)
        with self._lock:
            if fid not in self._families:
                self._families[fid] = self._build(*fid)
            return self._families[fid]

    def _build(self, a2, b2, d2, e2) -> dict[Key, ExactValue]:
        rows, cols = family_ranges(a2, b2, d2, e2)
        if not rows or not cols:
            return {}
        s = [sign_of_power((a2 + b2 + x) // 2 + (d2 + e2 + x) // 2 + x) for x in rows]
        t = [sign_of_power((a2 + e2 + f) // 2 + (b2 + d2 + f) // 2 + f) for f in cols]
        if len(rows) != len(cols) or sorted(s) != sorted(t):
            raise DomainError(f"family {(a2, b2, d2, e2)} admits no orthogonal table "
                              f"(rows {len(rows)}, columns {len(cols)})")
        rng = random.Random(f"{self.seed}:{a2}:{b2}:{d2}:{e2}")
        n = len(rows)
        # column j of M starts as the unit vector of a row with equal weight
        free = {1: [i for i in range(n) if s[i] == 1], -1: [i for i in range(n) if s[i] == -1]}
        for pool in free.values():
            rng.shuffle(pool)
        matrix = [[Fraction(0)] * n for _ in range(n)]
        for j in range(n):
            i = free[t[j]].pop()
            matrix[i][j] = Fraction(rng.choice((1, -1)) if self.flip_signs else 1)
        for _ in range(self.reflections):
            while True:
                w = [Fraction(rng.randint(-3, 3), rng.randint(1, 3)) for _ in range(n)]
                norm = sum(w[i] * w[i] * s[i] for i in range(n))
                if norm != 0:
                    break
            # M <- H M with H = I - 2 w (S w)^T / norm
            sw = [w[i] * s[i] for i in range(n)]
            for j in range(n):
                proj = sum(sw[i] * matrix[i][j] for i in range(n)) * 2 / norm
                for i in range(n):
                    matrix[i][j] -= w[i] * proj
        return {(a2, b2, rows[i], d2, e2, cols[j]): ExactValue.rational(matrix[i][j])
                for i in range(n) for j in range(n)}


class ExperimentalProvider(SixJSuperProvider):
    """6-j^S values from graded recoupling with moduli-only scalar factors.

    Non-canonical: every scalar-factor phase is +1 in the sublevel order
    (j, j - 1/2); results are high-precision decimals.
    """

    provenance = "experimental-recoupling"

    def __init__(self, precision: int = 60):
        self.precision = precision
        self._cache: dict[Key, Decimal] = {}
        self._lock = threading.Lock()

    def keys(self):
        with self._lock:
            return list(self._cache)

    def _lookup(self, key):
        with self._lock:
            if key in self._cache:
                return self._cache[key]
        a2, b2, c2, d2, e2, f2 = key
        triads = ((a2, b2, c2), (a2, e2, f2), (d2, b2, f2), (d2, e2, c2))
        if any(not abs(x - y) <= z <= x + y for x, y, z in triads):
            value = Decimal(0)
        else:
            overlap = _graded_overlap(a2, b2, d2, e2, c2, f2)
            phase = sign_of_power((a2 + b2 + c2) // 2 + (c2 + d2 + e2) // 2 + c2)
            value = overlap.to_decimal(self.precision)
            if phase < 0:
                value = value.copy_negate()
        with self._lock:
            self._cache[key] = value
        return value


def _sublevels(j2: int) -> tuple[int, ...]:
    return (j2,) if j2 == 0 else (j2, j2 - 1)


def scalar_factor_modulus(j1: int, j2: int, j3: int, l1: int, l2: int, l3: int) -> ExactValue:
    """|[j1 j2 j3; l1 l2 l3]|: nabla(l) delta^S(j) for integral j-perimeter,
    delta(l) nabla^S(j) otherwise; zero unless (l1 l2 l3) is an su(2) triangle."""
    if not abs(j1 - j2) <= j3 <= j1 + j2:
        return ExactValue.rational(0)
    if (l1 + l2 + l3) % 2 or not abs(l1 - l2) <= l3 <= l1 + l2:
        return ExactValue.rational(0)
    nabla_s, delta_s = supertriangles(j1, j2, j3)
    if (j1 + j2 + j3) % 2 == 0:
        return nabla(l1, l2, l3) * delta_s
    return delta(l1, l2, l3) * nabla_s


def _scg(j1, l1, m1, j2, l2, m2, j3, l3, m3) -> ExactValue:
    sf = scalar_factor_modulus(j1, j2, j3, l1, l2, l3)
    if sf.is_zero:
        return sf
    return sf * clebsch_gordan(l1, m1, l2, m2, l3, m3)


def _graded_overlap(j1, j2, j3, J, j12, j23) -> SurdSum:
    """<((j1 j2) j12, j3) J | (j1, (j2 j3) j23) J> at sublevel L = J, M = J."""
    acc = SurdSum()
    big_l = J
    m = big_l
    for l1 in _sublevels(j1):
        for l2 in _sublevels(j2):
            for l3 in _sublevels(j3):
                for l12 in _sublevels(j12):
                    for l23 in _sublevels(j23):
                        for m1 in range(-l1, l1 + 1, 2):
                            for m2 in range(-l2, l2 + 1, 2):
                                m3 = m - m1 - m2
                                if abs(m3) > l3 or (l3 + m3) % 2:
                                    continue
                                left = _scg(j1, l1, m1, j2, l2, m2, j12, l12, m1 + m2)
                                if left.is_zero:
                                    continue
                                left = left * _scg(j12, l12, m1 + m2, j3, l3, m3, J, big_l, m)
                                if left.is_zero:
                                    continue
                                right = _scg(j2, l2, m2, j3, l3, m3, j23, l23, m2 + m3)
                                if right.is_zero:
                                    continue
                                right = right * _scg(j1, l1, m1, j23, l23, m2 + m3, J, big_l, m)
                                acc += left * right
    return acc


def iter_family_keys(a2: int, b2: int, d2: int, e2: int) -> Iterator[Key]:
    rows, cols = family_ranges(a2, b2, d2, e2)
    for x in rows:
        for f in cols:
            yield (a2, b2, x, d2, e2, f)
