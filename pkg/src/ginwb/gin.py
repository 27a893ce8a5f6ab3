"""Generic initial ideals (revlex) by random rational coordinate changes.

Each trial substitutes an independent random integer matrix into the
generators, runs the truncated Buchberger algorithm and reads off the initial
ideal. A nonzero polynomial in the matrix entries vanishes only on a proper
closed set, so agreement of several independent trials is strong evidence the
specialisations were generic; any disagreement is reported, never voted away.
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass, field
from typing import Sequence

from .algebra import ChangeOfCoordinates, Polynomial, apply_to_all
from .errors import DisagreementAcrossTrials, NotRegularSequence, SingularMatrix
from .groebner import GroebnerBasis, buchberger_truncated, initial_ideal
from .hilbert import HilbertTable, ci_hilbert, hilbert_from_ideal
from .monomial_ideal import MonomialIdeal, graded_piece, is_revlex_segment, is_strongly_stable

__all__ = [
    "GinResult",
    "compute_gin",
    "default_bound",
    "graded_piece",
    "hilbert_of",
    "is_strongly_stable",
    "random_change",
]

log = logging.getLogger(__name__)

DEFAULT_TRIALS = 3
DEFAULT_COEFF_BOUND = 10**4
DEFAULT_SEED = 42


def random_change(n: int, seed: int, coeff_bound: int = DEFAULT_COEFF_BOUND, kind: str = "general") -> ChangeOfCoordinates:
    """Random invertible change of coordinates with entries in
    ``[-coeff_bound, coeff_bound]``, deterministic in ``seed``.

    ``kind="upper-triangular"`` sends ``x_j`` to ``x_j + sum_{i<j} c_ij x_i``.
    """
    if coeff_bound < 2:
        raise ValueError("coeff_bound must be at least 2")
    rng = random.Random(seed)
    while True:
        if kind == "general":
            rows = [[rng.randint(-coeff_bound, coeff_bound) for _ in range(n)] for _ in range(n)]
        elif kind == "upper-triangular":
            rows = [[0] * n for _ in range(n)]
            for j in range(n):
                rows[j][j] = 1
                for i in range(j):
                    rows[j][i] = rng.randint(-coeff_bound, coeff_bound)
        else:
            raise ValueError(f"unknown kind {kind!r}")
        try:
            return ChangeOfCoordinates(rows, kind=kind)
        except SingularMatrix:
            continue


def default_bound(gens: Sequence[Polynomial]) -> int:
    """One past the socle degree of a complete intersection with these degrees."""
    return sum(g.degree - 1 for g in gens if not g.is_zero()) + 1


@dataclass(frozen=True)
class GinResult:
    ideal: MonomialIdeal
    trials_used: int
    seeds: tuple
    agreed: bool
    borel: bool
    hilbert: HilbertTable
    bound: int
    changes: tuple = field(default=(), repr=False)
    trial_ideals: tuple = field(default=(), repr=False)
    bases: tuple = field(default=(), repr=False)

    def degree_piece(self, k: int) -> set:
        return graded_piece(self.ideal, k)

    def degree_piece_is_revlex(self, k: int) -> bool:
        return is_revlex_segment(self.ideal.graded_piece(k))


def _gin_trial(gens, seed, coeff_bound, bound, kind):
    n = gens[0].n
    C = random_change(n, seed, coeff_bound, kind)
    F = apply_to_all(gens, C)
    G = buchberger_truncated(F, bound)
    return C, G, initial_ideal(G)


def compute_gin(
    gens: Sequence[Polynomial],
    trials: int = DEFAULT_TRIALS,
    seed: int = DEFAULT_SEED,
    coeff_bound: int = DEFAULT_COEFF_BOUND,
    bound: int | None = None,
    *,
    kind: str = "general",
    complete_intersection: bool = False,
    strict: bool = True,
    keep_bases: bool = False,
) -> GinResult:
    """Gin of ``(gens)`` in revlex, truncated at ``bound``.

    Trial ``i`` uses seed ``seed + i``. With ``strict`` a disagreement raises
    :class:`DisagreementAcrossTrials`; otherwise the first trial's ideal is
    returned with ``agreed=False``. With ``complete_intersection`` the Hilbert
    function is compared with ``(1 + ... + t^(d-1))^n`` in every computed degree.
    """
    gens = [g for g in gens]
    if not gens:
        raise ValueError("compute_gin needs at least one generator")
    if trials < 1:
        raise ValueError("trials must be >= 1")
    if bound is None:
        bound = default_bound(gens)
    n = gens[0].n

    seeds = tuple(seed + i for i in range(trials))
    changes, ideals, bases = [], [], []
    for s in seeds:
        C, G, J = _gin_trial(gens, s, coeff_bound, bound, kind)
        log.debug("trial seed=%d: %d generators", s, len(J))
        changes.append(C)
        ideals.append(J)
        if keep_bases:
            bases.append(G)
    agreed = all(J == ideals[0] for J in ideals)
    if not agreed and strict:
        raise DisagreementAcrossTrials(
            f"{len(set(ideals))} distinct initial ideals over {trials} trials; raise coeff_bound or trials"
        )
    J = ideals[0]
    degs = {g.degree for g in gens}
    d = degs.pop() if len(degs) == 1 else None
    table = hilbert_from_ideal(J, bound)
    hilbert = HilbertTable(n, table.trimmed().values if table.values[-1] == 0 else table.values, d)

    if complete_intersection:
        if d is None or len(gens) != n:
            raise NotRegularSequence(f"need {n} forms of one degree, got degrees {[g.degree for g in gens]}")
        expected = [ci_hilbert(n, d, k) for k in range(bound + 1)]
        if list(table.values) != expected:
            raise NotRegularSequence(
                f"Hilbert function {list(table.values)} differs from the complete intersection {expected}"
            )

    return GinResult(
        ideal=J,
        trials_used=trials,
        seeds=seeds,
        agreed=agreed,
        borel=is_strongly_stable(J),
        hilbert=hilbert,
        bound=bound,
        changes=tuple(changes),
        trial_ideals=tuple(ideals),
        bases=tuple(bases),
    )


def hilbert_of(gens: Sequence[Polynomial], bound: int | None = None) -> HilbertTable:
    """Hilbert function of ``S/(gens)`` from one Groebner run in the given coordinates."""
    if bound is None:
        bound = default_bound(gens)
    G: GroebnerBasis = buchberger_truncated(gens, bound)
    return hilbert_from_ideal(initial_ideal(G), bound)
