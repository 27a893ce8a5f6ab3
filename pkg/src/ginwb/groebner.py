"""Degree-truncated homogeneous Buchberger algorithm over Q (revlex).

Pairs are handled with the normal selection strategy: all S-pairs of degree
``k`` are reduced before any pair of degree ``k + 1``, so stopping after the
bound leaves a basis that is correct in every degree up to it. Pair pruning
uses the Gebauer-Moeller installation of Buchberger's coprime and chain
criteria.
"""

from __future__ import annotations

import heapq
import logging
from dataclasses import dataclass, field
from operator import add, sub
from typing import Sequence

from gmpy2 import mpq

from .algebra import Monomial, Polynomial, revlex_key
from .errors import ArityMismatch, DegreeBoundExceeded, NotHomogeneous
from .monomial_ideal import MonomialIdeal

log = logging.getLogger(__name__)


def _divides(a, b) -> bool:
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def _lcm(a, b) -> tuple:
    return tuple(x if x > y else y for x, y in zip(a, b))


def _coprime(a, b) -> bool:
    for x, y in zip(a, b):
        if x and y:
            return False
    return True


def _heap_key(m):
    # heapq pops the smallest: highest degree first, then revlex-largest
    return (-sum(m), m[::-1], m)


class _Reducers:
    """Monic reducers (leading monomial, tail) with a divisor lookup cache."""

    def __init__(self):
        self.lms: list[tuple] = []
        self.tails: list[list] = []
        self._hit: dict = {}
        self._miss: set = set()

    def add(self, lm: tuple, tail: list) -> int:
        self.lms.append(lm)
        self.tails.append(tail)
        self._miss.clear()
        return len(self.lms) - 1

    def find(self, m: tuple):
        r = self._hit.get(m)
        if r is not None:
            return r
        if m in self._miss:
            return None
        for idx, lm in enumerate(self.lms):
            if _divides(lm, m):
                r = (tuple(map(sub, m, lm)), idx)
                self._hit[m] = r
                return r
        self._miss.add(m)
        return None


def _full_reduce(h: dict, red: _Reducers, quotients: dict | None = None) -> dict:
    """Reduce every term of ``h`` (consumed) and return the remainder."""
    rem: dict = {}
    heap = [_heap_key(m) for m in h]
    heapq.heapify(heap)
    tails = red.tails
    while heap:
        m = heapq.heappop(heap)[2]
        c = h.pop(m, None)
        if c is None:
            continue
        r = red.find(m)
        if r is None:
            rem[m] = c
            continue
        q, idx = r
        if quotients is not None:
            qd = quotients.setdefault(idx, {})
            qd[q] = qd.get(q, 0) + c
            if not qd[q]:
                del qd[q]
        for gm, gc in tails[idx]:
            mm = tuple(map(add, gm, q))
            v = h.get(mm)
            if v is None:
                h[mm] = -c * gc
                heapq.heappush(heap, _heap_key(mm))
            else:
                v -= c * gc
                if v:
                    h[mm] = v
                else:
                    del h[mm]
    return rem


def _split_monic(h: dict) -> tuple[tuple, list]:
    lm = max(h, key=revlex_key)
    lc = h[lm]
    tail = sorted(((m, c / lc) for m, c in h.items() if m != lm), key=lambda t: revlex_key(t[0]), reverse=True)
    return lm, tail


@dataclass(frozen=True)
class GroebnerBasis:
    """Reduced revlex Groebner basis, valid in all degrees up to ``degree_bound``."""

    generators: tuple
    degree_bound: int
    n: int
    order: str = "revlex"
    stats: dict = field(default_factory=dict, compare=False, repr=False)

    def leading_monomials(self) -> list[Monomial]:
        return [g.leading_monomial() for g in self.generators]

    def _reducers(self) -> _Reducers:
        red = _Reducers()
        for g in self.generators:
            g = g.monic()
            terms = g.terms
            red.add(tuple(terms[0][0]), [(tuple(m), c) for m, c in terms[1:]])
        return red

    def __len__(self):
        return len(self.generators)


def normal_form(f: Polynomial, G: GroebnerBasis, with_quotients: bool = False):
    """Remainder of ``f`` on division by ``G``.

    With ``with_quotients=True`` also returns ``[q_1, ..., q_s]`` such that
    ``f = sum q_i * G.generators[i] + remainder``.
    """
    if f.n != G.n:
        raise ArityMismatch(f"polynomial arity {f.n} vs basis arity {G.n}")
    if f.degree > G.degree_bound:
        raise DegreeBoundExceeded(f"degree {f.degree} exceeds the basis bound {G.degree_bound}")
    red = G._reducers()
    quot = {} if with_quotients else None
    rem = _full_reduce(f.as_dict(), red, quot)
    r = Polynomial._raw(rem, f.n)
    if not with_quotients:
        return r
    qs = []
    for idx, g in enumerate(G.generators):
        lc = g.leading_coefficient()
        # reducers were made monic, so rescale the quotient by 1/lc
        qs.append(Polynomial({m: c / lc for m, c in quot.get(idx, {}).items()}, f.n))
    return r, qs


def buchberger_truncated(gens: Sequence[Polynomial], bound: int) -> GroebnerBasis:
    """Homogeneous Buchberger run that discards S-pairs above ``bound``.

    The leading monomials of the result generate the initial ideal of
    ``(gens)`` in every degree ``<= bound``.
    """
    gens = [g for g in gens]
    if not gens:
        raise ValueError("buchberger_truncated needs at least one generator")
    n = gens[0].n
    for g in gens:
        if g.n != n:
            raise ArityMismatch(f"generators of arity {g.n} and {n}")
        if not g.is_homogeneous():
            raise NotHomogeneous(f"generator {g} is not homogeneous")
    gens = [g for g in gens if not g.is_zero()]
    if gens and bound < max(g.degree for g in gens):
        raise ValueError(f"bound {bound} below the generator degree {max(g.degree for g in gens)}")

    inputs: dict[int, list[dict]] = {}
    for g in gens:
        inputs.setdefault(g.degree, []).append(g.as_dict())

    red = _Reducers()
    lms = red.lms
    pairs: dict[tuple, tuple] = {}  # (i, j) -> lcm
    stats = {"pairs_reduced": 0, "zero_reductions": 0, "pairs_pruned": 0}

    def install(h: dict) -> None:
        lm, tail = _split_monic(h)
        new = red.add(lm, tail)
        cand = [(i, _lcm(lms[i], lm)) for i in range(new)]
        kept = []
        for idx, (i, L) in enumerate(cand):
            if _coprime(lms[i], lm):
                kept.append((i, L))
                continue
            later = cand[idx + 1:]
            if any(_divides(L2, L) for _, L2 in later) or any(_divides(L2, L) for _, L2 in kept):
                stats["pairs_pruned"] += 1
                continue
            kept.append((i, L))
        fresh = []
        for i, L in kept:
            if _coprime(lms[i], lm):
                stats["pairs_pruned"] += 1
            else:
                fresh.append((i, L))
        for key, L in list(pairs.items()):
            a, b = key
            if _divides(lm, L) and _lcm(lms[a], lm) != L and _lcm(lm, lms[b]) != L:
                del pairs[key]
                stats["pairs_pruned"] += 1
        for i, L in fresh:
            if sum(L) <= bound:
                pairs[(i, new)] = L

    def spoly(i: int, j: int, L: tuple) -> dict:
        qi = tuple(map(sub, L, lms[i]))
        qj = tuple(map(sub, L, lms[j]))
        h: dict = {}
        for m, c in red.tails[i]:
            h[tuple(map(add, m, qi))] = c
        for m, c in red.tails[j]:
            mm = tuple(map(add, m, qj))
            v = h.get(mm, 0) - c
            if v:
                h[mm] = v
            else:
                h.pop(mm, None)
        return h

    start = min(inputs) if inputs else bound + 1
    for k in range(start, bound + 1):
        for h in inputs.get(k, ()):
            rem = _full_reduce(dict(h), red)
            if rem:
                install(rem)
        todo = sorted((key for key, L in pairs.items() if sum(L) == k), key=lambda key: revlex_key(pairs[key]))
        for key in todo:
            L = pairs.pop(key, None)
            if L is None:
                continue
            stats["pairs_reduced"] += 1
            rem = _full_reduce(spoly(key[0], key[1], L), red)
            if rem:
                install(rem)
            else:
                stats["zero_reductions"] += 1
        log.debug("degree %d done: %d basis elements, %d pairs left", k, len(lms), len(pairs))

    generators = _interreduce(red, n)
    return GroebnerBasis(tuple(generators), bound, n, stats=stats)


def _interreduce(red: _Reducers, n: int) -> list[Polynomial]:
    out = []
    for lm, tail in zip(red.lms, red.tails):
        rem = _full_reduce(dict(tail), red)
        rem[lm] = mpq(1)
        out.append(Polynomial._raw(rem, n))
    out.sort(key=lambda g: revlex_key(g.leading_monomial()))
    return out


def initial_ideal(G: GroebnerBasis) -> MonomialIdeal:
    """Minimal generators of the leading-term ideal (valid up to the bound)."""
    return MonomialIdeal(G.leading_monomials(), G.n, degree_bound=G.degree_bound)
