"""Monomials, the reverse lexicographic order, sparse rational polynomials
and linear changes of coordinates.

Exponent vectors are 0-indexed tuples; ``x1`` is index 0. Coefficients are
``gmpy2.mpq`` rationals throughout.
"""

from __future__ import annotations

import enum
from functools import lru_cache
from itertools import combinations_with_replacement
from typing import Iterable, Mapping, Sequence

from gmpy2 import mpq

from .errors import ArityMismatch, NotHomogeneous, SingularMatrix, ZeroPolynomial


class Ordering(enum.IntEnum):
    LT = -1
    EQ = 0
    GT = 1


def as_rational(c) -> mpq:
    """Coerce ints, Fractions, strings like ``"3/2"`` and mpq to mpq."""
    if isinstance(c, str):
        return mpq(c.strip())
    if hasattr(c, "numerator") and hasattr(c, "denominator") and not isinstance(c, float):
        return mpq(int(c.numerator), int(c.denominator))
    if isinstance(c, float):
        raise TypeError("floating point coefficients are not accepted")
    return mpq(c)


def revlex_key(exps: Sequence[int]) -> tuple:
    """Sort key realising revlex: a larger key means a larger monomial."""
    return (sum(exps), tuple(-e for e in reversed(exps)))


class Monomial(tuple):
    """An exponent vector ``x^a``; compares in the degree reverse lexicographic order."""

    __slots__ = ()

    def __new__(cls, exps: Iterable[int]):
        exps = tuple(int(e) for e in exps)
        if any(e < 0 for e in exps):
            raise ValueError(f"negative exponent in {exps}")
        return super().__new__(cls, exps)

    @classmethod
    def one(cls, n: int) -> "Monomial":
        return cls((0,) * n)

    @classmethod
    def var(cls, i: int, n: int, power: int = 1) -> "Monomial":
        e = [0] * n
        e[i] = power
        return cls(e)

    @property
    def exps(self) -> tuple:
        return tuple(self)

    @property
    def n(self) -> int:
        return len(self)

    @property
    def degree(self) -> int:
        return sum(self)

    def _check(self, other) -> None:
        if len(self) != len(other):
            raise ArityMismatch(f"arity {len(self)} vs {len(other)}")

    def __mul__(self, other):
        if not isinstance(other, tuple):
            return NotImplemented
        self._check(other)
        return Monomial(a + b for a, b in zip(self, other))

    __rmul__ = __mul__

    def divides(self, other: Sequence[int]) -> bool:
        self._check(other)
        return all(a <= b for a, b in zip(self, other))

    def __truediv__(self, other):
        if not isinstance(other, tuple):
            return NotImplemented
        self._check(other)
        if not all(b <= a for a, b in zip(self, other)):
            raise ValueError(f"{Monomial(other)} does not divide {self}")
        return Monomial(a - b for a, b in zip(self, other))

    def lcm(self, other: Sequence[int]) -> "Monomial":
        self._check(other)
        return Monomial(max(a, b) for a, b in zip(self, other))

    def gcd(self, other: Sequence[int]) -> "Monomial":
        self._check(other)
        return Monomial(min(a, b) for a, b in zip(self, other))

    def __lt__(self, other):
        return revlex_compare(self, other) is Ordering.LT

    def __le__(self, other):
        return revlex_compare(self, other) is not Ordering.GT

    def __gt__(self, other):
        return revlex_compare(self, other) is Ordering.GT

    def __ge__(self, other):
        return revlex_compare(self, other) is not Ordering.LT

    __hash__ = tuple.__hash__
    __eq__ = tuple.__eq__
    __ne__ = tuple.__ne__

    def __repr__(self):
        return f"Monomial({tuple(self)})"

    def __str__(self):
        return monomial_str(self)


def monomial_str(exps: Sequence[int]) -> str:
    parts = []
    for i, e in enumerate(exps):
        if e == 1:
            parts.append(f"x{i + 1}")
        elif e > 1:
            parts.append(f"x{i + 1}^{e}")
    return " ".join(parts) if parts else "1"


def revlex_compare(u: Sequence[int], v: Sequence[int]) -> Ordering:
    """Compare two monomials: by degree, then u > v iff the last nonzero
    entry of ``u - v`` is negative."""
    if len(u) != len(v):
        raise ArityMismatch(f"arity {len(u)} vs {len(v)}")
    du, dv = sum(u), sum(v)
    if du != dv:
        return Ordering.GT if du > dv else Ordering.LT
    for a, b in zip(reversed(u), reversed(v)):
        if a != b:
            return Ordering.GT if a < b else Ordering.LT
    return Ordering.EQ


@lru_cache(maxsize=None)
def _degree_exps(n: int, d: int) -> tuple:
    out = []
    for combo in combinations_with_replacement(range(n), d):
        e = [0] * n
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    # reversed-tuple ascending is revlex descending within one degree
    out.sort(key=lambda e: e[::-1])
    return tuple(out)


def enumerate_degree_monomials(n: int, d: int) -> list[Monomial]:
    """All monomials of degree ``d`` in ``n`` variables, revlex-decreasing."""
    if n < 1 or d < 0:
        raise ValueError("need n >= 1 and d >= 0")
    return [Monomial(e) for e in _degree_exps(n, d)]


def degree_exponents(n: int, d: int) -> tuple:
    """Like :func:`enumerate_degree_monomials` but plain tuples (cached)."""
    return _degree_exps(n, d)


class Polynomial:
    """Immutable sparse polynomial with exact rational coefficients.

    Terms are kept sorted revlex-descending, so the leading term is ``terms[0]``.
    """

    __slots__ = ("n", "_map", "_terms")

    def __init__(self, terms: Mapping | Iterable = (), n: int | None = None, homogeneous: bool = False):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict = {}
        for m, c in items:
            m = tuple(m)
            if n is None:
                n = len(m)
            elif len(m) != n:
                raise ArityMismatch(f"monomial {m} in a ring with {n} variables")
            c = as_rational(c)
            acc[m] = acc.get(m, 0) + c
        if n is None:
            raise ValueError("arity of the zero polynomial must be given")
        self.n = n
        self._map = {m: c for m, c in acc.items() if c != 0}
        self._terms = None
        if homogeneous and len({sum(m) for m in self._map}) > 1:
            raise NotHomogeneous(f"polynomial {self} is not homogeneous")

    @classmethod
    def _raw(cls, mapping: dict, n: int) -> "Polynomial":
        # trusted constructor: mapping has tuple keys and nonzero mpq values
        p = cls.__new__(cls)
        p.n = n
        p._map = mapping
        p._terms = None
        return p

    @classmethod
    def zero(cls, n: int) -> "Polynomial":
        return cls._raw({}, n)

    @classmethod
    def constant(cls, c, n: int) -> "Polynomial":
        return cls({(0,) * n: c}, n)

    @classmethod
    def variable(cls, i: int, n: int) -> "Polynomial":
        return cls({Monomial.var(i, n): 1}, n)

    @classmethod
    def from_monomial(cls, m: Sequence[int], c=1) -> "Polynomial":
        return cls({tuple(m): c}, len(m))

    @property
    def terms(self) -> tuple:
        """``(Monomial, mpq)`` pairs, revlex-descending."""
        if self._terms is None:
            self._terms = tuple(
                (Monomial(m), self._map[m]) for m in sorted(self._map, key=revlex_key, reverse=True)
            )
        return self._terms

    def as_dict(self) -> dict:
        return dict(self._map)

    def coefficient(self, m: Sequence[int]) -> mpq:
        return self._map.get(tuple(m), mpq(0))

    def monomials(self) -> list[Monomial]:
        return [m for m, _ in self.terms]

    def is_zero(self) -> bool:
        return not self._map

    def __bool__(self):
        return bool(self._map)

    def __len__(self):
        return len(self._map)

    @property
    def degree(self) -> int:
        if not self._map:
            return -1
        return max(sum(m) for m in self._map)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self._map}) <= 1

    def leading_monomial(self) -> Monomial:
        return leading_monomial(self)

    def leading_coefficient(self) -> mpq:
        if not self._map:
            raise ZeroPolynomial("zero polynomial has no leading coefficient")
        return self.terms[0][1]

    def monic(self) -> "Polynomial":
        lc = self.leading_coefficient()
        return Polynomial._raw({m: c / lc for m, c in self._map.items()}, self.n)

    def _check(self, other: "Polynomial") -> None:
        if self.n != other.n:
            raise ArityMismatch(f"arity {self.n} vs {other.n}")

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            if isinstance(other, (int, mpq)) or hasattr(other, "denominator"):
                other = Polynomial.constant(other, self.n)
            else:
                return NotImplemented
        self._check(other)
        out = dict(self._map)
        for m, c in other._map.items():
            v = out.get(m, 0) + c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return Polynomial._raw(out, self.n)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw({m: -c for m, c in self._map.items()}, self.n)

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            return self + (-as_rational(other))
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "Polynomial":
        c = as_rational(c)
        if c == 0:
            return Polynomial.zero(self.n)
        return Polynomial._raw({m: v * c for m, v in self._map.items()}, self.n)

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            try:
                return self.scale(other)
            except (TypeError, ValueError):
                return NotImplemented
        self._check(other)
        out: dict = {}
        for m1, c1 in self._map.items():
            for m2, c2 in other._map.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                out[m] = out.get(m, 0) + c1 * c2
        return Polynomial._raw({m: c for m, c in out.items() if c}, self.n)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power")
        result = Polynomial.constant(1, self.n)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def mul_monomial(self, m: Sequence[int], c=1) -> "Polynomial":
        c = as_rational(c)
        return Polynomial._raw(
            {tuple(a + b for a, b in zip(k, m)): v * c for k, v in self._map.items()}, self.n
        )

    def substitute_zero(self, indices: Iterable[int]) -> "Polynomial":
        """Set the variables with the given 0-based indices to zero."""
        idx = set(indices)
        return Polynomial._raw(
            {m: c for m, c in self._map.items() if not any(m[i] for i in idx)}, self.n
        )

    def evaluate(self, point: Sequence) -> mpq:
        if len(point) != self.n:
            raise ArityMismatch(f"point of length {len(point)} for arity {self.n}")
        pt = [as_rational(p) for p in point]
        total = mpq(0)
        for m, c in self._map.items():
            v = c
            for x, e in zip(pt, m):
                if e:
                    v *= x**e
            total += v
        return total

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.n == other.n and self._map == other._map
        if other == 0:
            return not self._map
        return NotImplemented

    def __hash__(self):
        return hash((self.n, frozenset(self._map.items())))

    def __repr__(self):
        return f"Polynomial({str(self)!r}, n={self.n})"

    def __str__(self):
        if not self._map:
            return "0"
        out = []
        for i, (m, c) in enumerate(self.terms):
            sign = "-" if c < 0 else "+"
            a = abs(c)
            mono = monomial_str(m)
            if mono == "1":
                body = str(a)
            elif a == 1:
                body = mono
            else:
                body = f"{a} {mono}"
            if i == 0:
                out.append(body if sign == "+" else f"-{body}")
            else:
                out.append(f"{sign} {body}")
        return " ".join(out)


def leading_monomial(f: Polynomial) -> Monomial:
    """The revlex-greatest monomial of ``f``."""
    if f.is_zero():
        raise ZeroPolynomial("zero polynomial has no leading monomial")
    return Monomial(max(f._map, key=revlex_key))


class ChangeOfCoordinates:
    """An invertible linear substitution ``x_i -> sum_j entries[i][j] x_j``.

    Row ``i`` is the image of ``x_i``. The ``"upper-triangular"`` kind maps every
    ``x_j`` to ``x_j`` plus a combination of ``x_1, ..., x_{j-1}``; indexed by
    "coefficient of x_i in the image of x_j" that matrix (``transpose()``) is
    unit upper triangular.
    """

    KINDS = ("general", "upper-triangular")

    __slots__ = ("entries", "kind", "determinant")

    def __init__(self, entries: Sequence[Sequence], kind: str = "general"):
        if kind not in self.KINDS:
            raise ValueError(f"unknown kind {kind!r}")
        rows = tuple(tuple(as_rational(c) for c in row) for row in entries)
        n = len(rows)
        if n == 0 or any(len(r) != n for r in rows):
            raise ValueError("change of coordinates needs a square n x n matrix")
        if kind == "upper-triangular":
            for i in range(n):
                for j in range(n):
                    c = rows[i][j]
                    if (i == j and c != 1) or (j > i and c != 0):
                        raise ValueError(
                            "upper-triangular kind needs x_j -> x_j + (terms in x_1..x_{j-1})"
                        )
        from .linalg import determinant

        det = determinant(rows)
        if det == 0:
            raise SingularMatrix("change of coordinates has zero determinant")
        self.entries = rows
        self.kind = kind
        self.determinant = det

    @classmethod
    def identity(cls, n: int) -> "ChangeOfCoordinates":
        return cls([[int(i == j) for j in range(n)] for i in range(n)])

    @property
    def n(self) -> int:
        return len(self.entries)

    def image(self, i: int) -> Polynomial:
        """The linear form that ``x_{i+1}`` is sent to."""
        n = self.n
        return Polynomial._raw(
            {Monomial.var(j, n): c for j, c in enumerate(self.entries[i]) if c}, n
        )

    def transpose(self) -> tuple:
        return tuple(zip(*self.entries))

    def inverse(self) -> "ChangeOfCoordinates":
        from .linalg import inverse

        return ChangeOfCoordinates(inverse(self.entries))

    def __eq__(self, other):
        return isinstance(other, ChangeOfCoordinates) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        rows = "; ".join(" ".join(str(c) for c in r) for r in self.entries)
        return f"ChangeOfCoordinates([{rows}], kind={self.kind!r})"


class _PowerCache:
    """Expanded powers of the linear forms ``sum_j rows[i][j] x_j``."""

    def __init__(self, rows: Sequence[Sequence]):
        n = len(rows)
        self.n = n
        self.powers = []
        for row in rows:
            lin = {}
            for j, c in enumerate(row):
                c = as_rational(c)
                if c:
                    lin[Monomial.var(j, n)] = c
            self.powers.append([{(0,) * n: mpq(1)}, lin])

    def get(self, i: int, e: int) -> dict:
        pw = self.powers[i]
        while len(pw) <= e:
            pw.append(_mul_maps(pw[-1], pw[1]))
        return pw[e]


def _mul_maps(a: dict, b: dict) -> dict:
    out: dict = {}
    for m1, c1 in a.items():
        for m2, c2 in b.items():
            m = tuple(x + y for x, y in zip(m1, m2))
            out[m] = out.get(m, 0) + c1 * c2
    return {m: c for m, c in out.items() if c}


def substitute_linear(f: Polynomial, rows: Sequence[Sequence], _cache: _PowerCache | None = None) -> Polynomial:
    """Substitute ``x_i -> sum_j rows[i][j] x_j`` for an arbitrary (possibly
    singular) square matrix."""
    if f.n != len(rows):
        raise ArityMismatch(f"polynomial arity {f.n} vs matrix size {len(rows)}")
    cache = _cache or _PowerCache(rows)
    out: dict = {}
    for m, c in f._map.items():
        prod = {(0,) * f.n: c}
        for i, e in enumerate(m):
            if e:
                prod = _mul_maps(prod, cache.get(i, e))
        for k, v in prod.items():
            out[k] = out.get(k, 0) + v
    return Polynomial._raw({m: c for m, c in out.items() if c}, f.n)


def apply_coordinate_change(f: Polynomial, C: ChangeOfCoordinates) -> Polynomial:
    """Substitute ``x_i -> sum_j c_ij x_j`` into ``f`` and collect terms."""
    if f.n != C.n:
        raise ArityMismatch(f"polynomial arity {f.n} vs matrix size {C.n}")
    return substitute_linear(f, C.entries)


def apply_to_all(forms: Sequence[Polynomial], C: ChangeOfCoordinates | Sequence[Sequence]) -> list[Polynomial]:
    rows = C.entries if isinstance(C, ChangeOfCoordinates) else C
    cache = _PowerCache(rows)
    return [substitute_linear(f, rows, cache) for f in forms]
