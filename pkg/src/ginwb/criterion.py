"""The determinant test for revlex-ness of the degree-d piece of a Gin.

With ``u_1 > u_2 > ... > u_N`` the degree-d monomials in revlex order and the
forms written as ``f_i = sum_k b_ik u_k``, a linear substitution ``C`` sends
``u_k`` to ``m_k = sum_l g_kl u_l`` and ``f_i`` to ``F_i = sum_l a_il u_l``
with ``a = b g``. The degree-d piece of ``in(F_1, ..., F_n)`` is the revlex
segment ``{u_1, ..., u_n}`` exactly when the leading ``n x n`` block of ``a``
is invertible. That determinant is a polynomial in the ``c_ij``; here it is
only ever evaluated at rational points.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Sequence

from gmpy2 import mpq

from .algebra import ChangeOfCoordinates, Polynomial, apply_to_all, degree_exponents
from .errors import ArityMismatch, CheckFailure
from .linalg import determinant
from .monomial_ideal import is_revlex_segment

__all__ = [
    "BMatrix",
    "CoefficientMatrix",
    "CriterionReport",
    "GMatrix",
    "SpecializationReport",
    "b_matrix",
    "cauchy_binet_delta",
    "coefficient_matrix",
    "evaluate_criterion",
    "g_coefficient",
    "g_matrix",
    "specialization_checks",
]


def _check_forms(forms: Sequence[Polynomial]) -> tuple[int, int]:
    if not forms:
        raise ValueError("need at least one form")
    n = forms[0].n
    if len(forms) != n:
        raise ArityMismatch(f"need exactly n = {n} forms, got {len(forms)}")
    degs = {f.degree for f in forms}
    if len(degs) != 1 or any(not f.is_homogeneous() or f.n != n for f in forms):
        raise ArityMismatch("forms must be homogeneous of a single degree and arity")
    return n, degs.pop()


def _rows(C) -> tuple:
    return C.entries if isinstance(C, ChangeOfCoordinates) else tuple(tuple(mpq(c) for c in r) for r in C)


@dataclass(frozen=True)
class CoefficientMatrix:
    """``a_ij``: coefficient of the j-th revlex monomial of degree d in the
    i-th transformed form, for ``1 <= i, j <= n``; ``determinant`` is its det."""

    entries: tuple
    determinant: mpq
    change: tuple = field(repr=False)
    forms: tuple = field(repr=False)


@dataclass(frozen=True)
class BMatrix:
    """``b_ik``: the forms in the revlex monomial basis, shape ``n x N``."""

    entries: tuple
    n: int
    d: int

    def reconstruct(self) -> list[Polynomial]:
        basis = degree_exponents(self.n, self.d)
        return [Polynomial({u: c for u, c in zip(basis, row) if c}, self.n) for row in self.entries]


@dataclass(frozen=True)
class GMatrix:
    """``g_kl`` for ``1 <= k <= N`` and ``1 <= l <= n``, shape ``N x n``."""

    entries: tuple
    n: int
    d: int


def coefficient_matrix(forms: Sequence[Polynomial], C) -> CoefficientMatrix:
    """Leading ``n x n`` coefficient block of the transformed forms.

    ``C`` may be a :class:`ChangeOfCoordinates` or any square matrix; the
    latter is used for singular specialisations.
    """
    n, d = _check_forms(forms)
    rows = _rows(C)
    if len(rows) != n:
        raise ArityMismatch(f"matrix of size {len(rows)} for {n} variables")
    basis = degree_exponents(n, d)[:n]
    F = apply_to_all(forms, rows)
    a = tuple(tuple(f.coefficient(u) for u in basis) for f in F)
    return CoefficientMatrix(a, determinant(a), rows, tuple(forms))


def b_matrix(forms: Sequence[Polynomial]) -> BMatrix:
    n, d = _check_forms(forms)
    basis = degree_exponents(n, d)
    return BMatrix(tuple(tuple(f.coefficient(u) for u in basis) for f in forms), n, d)


def _compositions_bounded(total: int, caps: Sequence[int]):
    """Vectors ``t`` with ``sum(t) == total`` and ``0 <= t[j] <= caps[j]``."""
    n = len(caps)
    t = [0] * n
    suffix = [0] * (n + 1)
    for j in range(n - 1, -1, -1):
        suffix[j] = suffix[j + 1] + caps[j]

    def rec(j: int, left: int):
        if j == n - 1:
            if left <= caps[j]:
                t[j] = left
                yield tuple(t)
            return
        lo = max(0, left - suffix[j + 1])
        for v in range(lo, min(caps[j], left) + 1):
            t[j] = v
            yield from rec(j + 1, left - v)

    if total > suffix[0]:
        return
    yield from rec(0, total)


def _iterated_binomial(total: int, parts: Sequence[int]) -> int:
    # C(a, t1) C(a - t1, t2) ... , the multinomial coefficient
    out = 1
    left = total
    for p in parts:
        out *= comb(left, p)
        left -= p
    return out


def g_coefficient(k: int, l: int, C, n: int, d: int) -> mpq:
    """Coefficient of ``u_l`` in the image of ``u_k`` (1-based revlex indices),
    summed over the multi-index tuples ``t_1, ..., t_n`` with ``|t_i| = alpha_ki``
    and ``t_1 + ... + t_n = alpha_l``."""
    basis = degree_exponents(n, d)
    N = len(basis)
    if not (1 <= k <= N and 1 <= l <= N):
        raise IndexError(f"indices must lie in 1..{N}")
    rows = _rows(C)
    if len(rows) != n:
        raise ArityMismatch(f"matrix of size {len(rows)} for {n} variables")
    alpha_k = basis[k - 1]
    alpha_l = basis[l - 1]
    total = mpq(0)

    def rec(i: int, remaining: list, coeff: mpq):
        nonlocal total
        if i == n:
            if not any(remaining):
                total += coeff
            return
        for t in _compositions_bounded(alpha_k[i], remaining):
            c = coeff * _iterated_binomial(alpha_k[i], t)
            for j, e in enumerate(t):
                if e:
                    c *= rows[i][j] ** e
            if c == 0:
                continue
            rec(i + 1, [r - e for r, e in zip(remaining, t)], c)

    rec(0, list(alpha_l), mpq(1))
    return total


def g_matrix(C, n: int, d: int, columns: int | None = None) -> GMatrix:
    N = comb(n + d - 1, n - 1)
    cols = n if columns is None else columns
    return GMatrix(tuple(tuple(g_coefficient(k, l, C, n, d) for l in range(1, cols + 1)) for k in range(1, N + 1)), n, d)


def cauchy_binet_delta(B, G) -> mpq:
    """``det(B G)`` expanded as the sum over n-subsets of products of minors."""
    Bm = B.entries if isinstance(B, BMatrix) else B
    Gm = G.entries if isinstance(G, GMatrix) else G
    n = len(Bm)
    N = len(Bm[0]) if n else 0
    if any(len(r) != N for r in Bm) or len(Gm) != N or any(len(r) != n for r in Gm):
        raise ValueError(f"shape mismatch: B is {n}x{N}, G is {len(Gm)}x{len(Gm[0]) if Gm else 0}")
    total = mpq(0)
    for S in combinations(range(N), n):
        bminor = determinant([[Bm[i][k] for k in S] for i in range(n)])
        if bminor == 0:
            continue
        total += bminor * determinant([Gm[k] for k in S])
    return total


@dataclass(frozen=True)
class SpecializationReport:
    first_column: tuple
    evaluations: tuple
    ratios: dict
    ok: bool


def specialization_checks(forms: Sequence[Polynomial], C) -> SpecializationReport:
    """Two identities on the coefficient block.

    (a) the first column is each form evaluated at the first column of ``C``;
    (b) setting every column of ``C`` equal to the first makes column ``l`` a
    fixed positive integer multiple ``r_l`` of column 1.
    Raises :class:`CheckFailure` when either fails.
    """
    n, d = _check_forms(forms)
    rows = _rows(C)
    A = coefficient_matrix(forms, rows)
    first = tuple(A.entries[i][0] for i in range(n))
    point = [rows[i][0] for i in range(n)]
    evals = tuple(f.evaluate(point) for f in forms)
    if first != evals:
        raise CheckFailure(f"first column {first} differs from the evaluations {evals}")

    collapsed = [[rows[i][0]] * n for i in range(n)]
    S = coefficient_matrix(forms, collapsed).entries
    ratios: dict = {}
    for l in range(n):
        r = None
        for i in range(n):
            base, val = S[i][0], S[i][l]
            if base == 0:
                if val != 0:
                    raise CheckFailure(f"column {l + 1} nonzero where column 1 vanishes (row {i + 1})")
                continue
            q = val / base
            if r is None:
                r = q
            elif q != r:
                raise CheckFailure(f"column {l + 1}: ratios {r} and {q} differ across rows")
        if r is not None and (r.denominator != 1 or r <= 0):
            raise CheckFailure(f"column {l + 1}: ratio {r} is not a positive integer")
        ratios[l + 1] = None if r is None else int(r)
    return SpecializationReport(first, evals, ratios, True)


@dataclass(frozen=True)
class CriterionReport:
    """Determinant evaluations at successive random specialisations.

    ``nonzero`` is a proof that the determinant is not identically zero, hence
    that the degree-d piece of the Gin is revlex. All-zero samples are only
    reported, never promoted to a proof of vanishing.
    """

    n: int
    d: int
    seeds: tuple
    deltas: tuple
    nonzero: bool
    specialization: SpecializationReport | None
    changes: tuple = field(default=(), repr=False)

    @property
    def delta(self) -> mpq:
        return next((x for x in self.deltas if x != 0), mpq(0))

    @property
    def verdict(self) -> str:
        if self.nonzero:
            return "revlex (determinant nonzero at a sampled point)"
        return "criterion fails at all sampled points"


def evaluate_criterion(forms: Sequence[Polynomial], trials: int = 3, seed: int = 42, coeff_bound: int = 10**4, kind: str = "general") -> CriterionReport:
    """Sample the determinant at random changes, stopping at the first nonzero
    value; ``trials`` bounds the number of samples."""
    from .gin import random_change

    n, d = _check_forms(forms)
    seeds, deltas, changes = [], [], []
    checks = None
    for i in range(trials):
        C = random_change(n, seed + i, coeff_bound, kind)
        A = coefficient_matrix(forms, C)
        if checks is None:
            checks = specialization_checks(forms, C)
        seeds.append(seed + i)
        deltas.append(A.determinant)
        changes.append(C)
        if A.determinant != 0:
            break
    return CriterionReport(n, d, tuple(seeds), tuple(deltas), any(x != 0 for x in deltas), checks, tuple(changes))


def segment_matches_determinant(delta: mpq, degree_piece) -> bool:
    """The determinant is nonzero exactly when the degree-d piece is revlex."""
    return (delta != 0) == is_revlex_segment(degree_piece)
