"""Monomial ideals given by minimal generators, graded pieces, shadows and
strong stability."""

from __future__ import annotations

from typing import Iterable, Sequence

from .algebra import Monomial, degree_exponents, revlex_key
from .errors import ArityMismatch


def _divides(a: Sequence[int], b: Sequence[int]) -> bool:
    return all(x <= y for x, y in zip(a, b))


def minimalize(monomials: Iterable[Sequence[int]]) -> list[tuple]:
    """Drop every monomial divisible by another one in the collection."""
    ms = sorted({tuple(m) for m in monomials}, key=sum)
    out: list[tuple] = []
    for m in ms:
        if not any(_divides(g, m) for g in out):
            out.append(m)
    return out


class MonomialIdeal:
    """Ideal generated by monomials, stored by its minimal generators.

    ``degree_bound``, when set, records that the generators are only known to
    be complete up to that degree (e.g. a truncated Groebner computation).
    """

    __slots__ = ("n", "min_gens", "degree_bound", "_by_degree")

    def __init__(self, gens: Iterable[Sequence[int]], n: int | None = None, degree_bound: int | None = None):
        gens = [tuple(g) for g in gens]
        if n is None:
            if not gens:
                raise ValueError("arity of an empty monomial ideal must be given")
            n = len(gens[0])
        for g in gens:
            if len(g) != n:
                raise ArityMismatch(f"generator {g} in a ring with {n} variables")
        mins = minimalize(gens)
        self.n = n
        self.min_gens = frozenset(Monomial(g) for g in mins)
        self.degree_bound = degree_bound
        self._by_degree: dict = {}

    @classmethod
    def zero(cls, n: int) -> "MonomialIdeal":
        return cls([], n)

    @classmethod
    def maximal(cls, n: int) -> "MonomialIdeal":
        return cls([Monomial.var(i, n) for i in range(n)], n)

    def generators(self) -> list[Monomial]:
        """Minimal generators sorted by degree, then revlex-descending."""
        return sorted(self.min_gens, key=lambda m: (sum(m), tuple(m[::-1])))

    def exponent_vectors(self) -> list[list[int]]:
        return [list(m) for m in self.generators()]

    def __contains__(self, m: Sequence[int]) -> bool:
        m = tuple(m)
        if len(m) != self.n:
            raise ArityMismatch(f"monomial {m} vs ideal arity {self.n}")
        return any(_divides(g, m) for g in self.min_gens)

    def contains(self, m: Sequence[int]) -> bool:
        return m in self

    def graded_piece(self, k: int) -> frozenset:
        """All degree-``k`` monomials (as tuples) lying in the ideal."""
        piece = self._by_degree.get(k)
        if piece is None:
            gens = [g for g in self.min_gens if sum(g) <= k]
            if not gens or k < 0:
                piece = frozenset()
            else:
                piece = frozenset(m for m in degree_exponents(self.n, k) if any(_divides(g, m) for g in gens))
            self._by_degree[k] = piece
        return piece

    def standard_monomials(self, k: int) -> list[tuple]:
        """Degree-``k`` monomials outside the ideal, revlex-descending."""
        piece = self.graded_piece(k)
        return [m for m in degree_exponents(self.n, k) if m not in piece]

    def max_generator_degree(self) -> int:
        return max((sum(g) for g in self.min_gens), default=0)

    def __eq__(self, other):
        return isinstance(other, MonomialIdeal) and self.n == other.n and self.min_gens == other.min_gens

    def __hash__(self):
        return hash((self.n, self.min_gens))

    def __len__(self):
        return len(self.min_gens)

    def __iter__(self):
        return iter(self.generators())

    def __repr__(self):
        return f"MonomialIdeal([{', '.join(str(g) for g in self.generators())}])"


def graded_piece(J: MonomialIdeal, k: int) -> set[Monomial]:
    if k < 0:
        raise ValueError("degree must be non-negative")
    return {Monomial(m) for m in J.graded_piece(k)}


def is_strongly_stable(J: MonomialIdeal) -> bool:
    """True iff ``m * x_i / x_j`` lies in J for every generator m, every
    ``x_j | m`` and every ``i < j``."""
    for m in J.min_gens:
        for j in range(J.n):
            if not m[j]:
                continue
            for i in range(j):
                moved = list(m)
                moved[j] -= 1
                moved[i] += 1
                if tuple(moved) not in J:
                    return False
    return True


def borel_moves(m: Sequence[int]) -> list[tuple]:
    """Immediate Borel predecessors: shift one unit of ``x_j`` to ``x_{j-1}``."""
    out = []
    for j in range(1, len(m)):
        if m[j]:
            e = list(m)
            e[j] -= 1
            e[j - 1] += 1
            out.append(tuple(e))
    return out


def is_borel_closed(monomials: Iterable[Sequence[int]]) -> bool:
    """Whether a set of same-degree monomials is closed under Borel moves."""
    s = {tuple(m) for m in monomials}
    return all(p in s for m in s for p in borel_moves(m))


def borel_closure(monomials: Iterable[Sequence[int]]) -> set[tuple]:
    out = {tuple(m) for m in monomials}
    stack = list(out)
    while stack:
        for p in borel_moves(stack.pop()):
            if p not in out:
                out.add(p)
                stack.append(p)
    return out


def shadow(M: Iterable[Sequence[int]], n: int) -> set[Monomial]:
    """``{x_1, ..., x_n} * M`` for a set of monomials of a single degree."""
    M = [tuple(m) for m in M]
    if len({sum(m) for m in M}) > 1:
        raise ValueError("shadow needs monomials of a single degree")
    out = set()
    for m in M:
        if len(m) != n:
            raise ArityMismatch(f"monomial {m} vs arity {n}")
        for i in range(n):
            e = list(m)
            e[i] += 1
            out.add(Monomial(e))
    return out


def is_revlex_segment(monomials: Iterable[Sequence[int]]) -> bool:
    """Whether a same-degree set consists of the largest monomials in revlex."""
    ms = [tuple(m) for m in monomials]
    if not ms:
        return True
    degs = {sum(m) for m in ms}
    if len(degs) != 1:
        raise ValueError("revlex segment check needs monomials of a single degree")
    n = len(ms[0])
    top = degree_exponents(n, degs.pop())[: len(ms)]
    return set(top) == set(ms)


def revlex_sorted(monomials: Iterable[Sequence[int]], descending: bool = True) -> list[Monomial]:
    return [Monomial(m) for m in sorted(monomials, key=revlex_key, reverse=descending)]
