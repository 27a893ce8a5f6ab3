"""Degree-by-degree enumeration of the monomial ideals that can be the Gin of
an (n, d) complete intersection with the strong Lefschetz property.

Starting from a strongly stable degree-d piece, each degree k adds to the
shadow of J_{k-1} exactly as many monomials as the Hilbert function demands.
New monomials must keep J_k strongly stable and keep every map
``x_n^b : (S/J)_t -> (S/J)_k`` of full rank. Every consistent completion up
to one past the socle degree is returned, after a full SLP check.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, replace
from typing import Iterable, Iterator, Sequence

from .algebra import degree_exponents
from .errors import InfeasibleState
from .hilbert import HilbertTable, ci_hilbert, ci_ideal_size, ci_table, hilbert_from_ideal
from .lefschetz import GradedQuotient, check_lefschetz
from .monomial_ideal import MonomialIdeal, borel_moves, is_borel_closed, is_strongly_stable, shadow

__all__ = ["ReconstructionState", "lefschetz_feasible", "reconstruct", "roman", "shadow"]

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class ReconstructionState:
    """Partial ideal: ``pieces[k]`` is J_k for every decided degree ``k``."""

    n: int
    d: int
    k: int
    pieces: dict
    gens: tuple
    targets: HilbertTable
    branch: tuple = ()

    def in_ideal(self, m: tuple) -> bool:
        return m in self.pieces.get(sum(m), ())

    def hilbert(self, t: int) -> int:
        return self.targets[t]

    def ideal(self) -> MonomialIdeal:
        return MonomialIdeal(self.gens, self.n)


def lefschetz_feasible(state: ReconstructionState, candidate: Sequence[int]) -> bool:
    """Whether adding ``candidate`` (of degree ``state.k``) leaves every
    ``x_n^b`` map into degree k injective where injectivity is required.

    Writing ``candidate = x_n^b * m``, the map ``(S/J)_t -> (S/J)_k`` with
    ``t = k - b`` must be injective whenever ``H(t) <= H(k)``; that forbids the
    candidate unless ``m`` already lies in J.
    """
    c = tuple(candidate)
    k = sum(c)
    hk = state.hilbert(k)
    for b in range(1, c[-1] + 1):
        t = k - b
        m = c[:-1] + (c[-1] - b,)
        if state.hilbert(t) <= hk and state.hilbert(t) > 0 and not state.in_ideal(m):
            return False
    return True


def _degree_full_rank(state: ReconstructionState, k: int, piece: frozenset) -> bool:
    """Full-rank test for every ``x_n^b : (S/J)_{k-b} -> (S/J)_k`` once J_k is fixed."""
    n = state.n
    hk = state.hilbert(k)
    for b in range(1, k + 1):
        t = k - b
        ht = state.hilbert(t)
        if ht == 0 or hk == 0:
            continue
        jt = state.pieces.get(t, frozenset())
        hits = 0
        for m in degree_exponents(n, t):
            if m in jt:
                continue
            if m[:-1] + (m[-1] + b,) not in piece:
                hits += 1
        if hits != min(ht, hk):
            return False
    return True


def _borel_subsets(cands: list, base: frozenset, need: int) -> Iterator[list]:
    """Subsets of ``cands`` of size ``need`` whose union with ``base`` is closed
    under Borel moves. ``cands`` is revlex-descending, so every predecessor of a
    candidate is decided before the candidate itself."""
    chosen: list = []
    chosen_set: set = set()
    total = len(cands)

    def rec(i: int, left: int):
        if left == 0:
            yield list(chosen)
            return
        if total - i < left:
            return
        c = cands[i]
        if all(p in base or p in chosen_set for p in borel_moves(c)):
            chosen.append(c)
            chosen_set.add(c)
            yield from rec(i + 1, left - 1)
            chosen.pop()
            chosen_set.discard(c)
        yield from rec(i + 1, left)

    yield from rec(0, need)


def _search(state: ReconstructionState, last: int, stats: dict) -> Iterator[ReconstructionState]:
    k = state.k + 1
    if k > last:
        yield state
        return
    n = state.n
    prev = state.pieces.get(k - 1, frozenset())
    shad = frozenset(tuple(m) for m in shadow(prev, n)) if prev else frozenset()
    deficit = ci_ideal_size(n, state.d, k) - len(shad)
    if deficit < 0:
        stats["dead"] += 1
        return
    probe = replace(state, k=k)
    cands = [m for m in degree_exponents(n, k) if m not in shad and lefschetz_feasible(probe, m)]
    found = False
    for idx, chosen in enumerate(_borel_subsets(cands, shad, deficit)):
        piece = shad | frozenset(chosen)
        pieces = dict(state.pieces)
        pieces[k] = piece
        nxt = ReconstructionState(n, state.d, k, pieces, state.gens + tuple(chosen), state.targets, state.branch + (idx,))
        if not _degree_full_rank(nxt, k, piece):
            stats["rank_rejected"] += 1
            continue
        found = True
        yield from _search(nxt, last, stats)
    if not found:
        stats["dead"] += 1


def reconstruct(n: int, d: int, initial: Iterable[Sequence[int]] | None = None) -> list[MonomialIdeal]:
    """All strongly stable ideals with the (n, d) complete-intersection Hilbert
    function, the given degree-d piece (default: the revlex segment of size n)
    and ``x_n`` as a strong Lefschetz element.

    Raises :class:`InfeasibleState` when no completion exists.
    """
    if n < 1 or d < 2:
        raise ValueError("need n >= 1 and d >= 2")
    if initial is None:
        start = list(degree_exponents(n, d)[:n])
    else:
        start = [tuple(m) for m in initial]
    if any(len(m) != n or sum(m) != d for m in start):
        raise ValueError(f"initial piece must consist of degree-{d} monomials in {n} variables")
    if len(set(start)) != ci_ideal_size(n, d, d):
        raise ValueError(f"initial piece needs {ci_ideal_size(n, d, d)} monomials, got {len(set(start))}")
    if not is_borel_closed(start):
        raise ValueError("initial piece is not strongly stable")

    targets = ci_table(n, d)
    socle = n * (d - 1)
    state = ReconstructionState(n, d, d, {d: frozenset(start)}, tuple(start), targets)
    if not _degree_full_rank(state, d, frozenset(start)):
        raise InfeasibleState("initial piece already breaks the x_n Lefschetz condition")

    stats = {"dead": 0, "rank_rejected": 0, "final_rejected": 0}
    results = []
    for final in _search(state, socle + 1, stats):
        J = final.ideal()
        if not _final_checks(J, n, d):
            stats["final_rejected"] += 1
            continue
        results.append(J)
    log.debug("reconstruct(%d, %d): %d candidates, stats %s", n, d, len(results), stats)
    if not results:
        raise InfeasibleState(f"no completion for (n, d) = ({n}, {d}) from the given degree-{d} piece")
    unique = {J: None for J in results}
    return sorted(unique, key=_canonical_key)


def _final_checks(J: MonomialIdeal, n: int, d: int) -> bool:
    socle = n * (d - 1)
    table = hilbert_from_ideal(J, socle + 1)
    if list(table.values) != [ci_hilbert(n, d, k) for k in range(socle + 2)]:
        return False
    if not is_strongly_stable(J):
        return False
    return check_lefschetz(GradedQuotient(J), "SLP").holds


def _canonical_key(J: MonomialIdeal) -> list:
    # revlex-larger generators first at the first difference
    return [(sum(g), tuple(g[::-1])) for g in J.generators()]


def roman(i: int) -> str:
    numerals = [(10, "X"), (9, "IX"), (5, "V"), (4, "IV"), (1, "I")]
    out = ""
    for v, s in numerals:
        while i >= v:
            out += s
            i -= v
    return out
