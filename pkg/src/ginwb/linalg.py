"""Exact dense linear algebra over the rationals.

Rank and determinant clear denominators row by row and run fraction-free
(Bareiss) elimination on integers.
"""

from __future__ import annotations

from math import lcm
from typing import Sequence

from gmpy2 import mpq, mpz

Matrix = Sequence[Sequence]


def _integer_rows(M: Matrix) -> tuple[list[list], mpq]:
    """Scale each row to integers; return the rows and the product of scales."""
    rows = []
    scale = mpq(1)
    for row in M:
        row = [mpq(c) for c in row]
        den = 1
        for c in row:
            if c.denominator != 1:
                den = lcm(den, int(c.denominator))
        rows.append([mpz(c * den) for c in row])
        scale *= den
    return rows, scale


def _bareiss(rows: list[list], ncols: int, *, track_sign: bool = False):
    """In-place fraction-free elimination. Returns (rank, sign, last pivot)."""
    nrows = len(rows)
    r = 0
    prev = mpz(1)
    sign = 1
    for c in range(ncols):
        if r == nrows:
            break
        piv = None
        for i in range(r, nrows):
            if rows[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        if piv != r:
            rows[r], rows[piv] = rows[piv], rows[r]
            sign = -sign
        p = rows[r][c]
        prow = rows[r]
        for i in range(r + 1, nrows):
            row = rows[i]
            a = row[c]
            for j in range(c + 1, ncols):
                row[j] = (p * row[j] - a * prow[j]) // prev
            row[c] = mpz(0)
        prev = p
        r += 1
    return r, sign, prev


def rank(M: Matrix) -> int:
    """Exact rank of a rational matrix (empty matrices have rank 0)."""
    if not M or not M[0]:
        return 0
    rows, _ = _integer_rows(M)
    r, _, _ = _bareiss(rows, len(rows[0]))
    return r


def determinant(M: Matrix) -> mpq:
    n = len(M)
    if n == 0:
        return mpq(1)
    if any(len(row) != n for row in M):
        raise ValueError("determinant of a non-square matrix")
    rows, scale = _integer_rows(M)
    r, sign, last = _bareiss(rows, n)
    if r < n:
        return mpq(0)
    return mpq(sign * last) / scale


def matmul(A: Matrix, B: Matrix) -> list[list]:
    if A and len(A[0]) != len(B):
        raise ValueError(f"shape mismatch {len(A)}x{len(A[0])} times {len(B)}x?")
    cols = list(zip(*B)) if B else []
    return [[sum((a * b for a, b in zip(row, col)), mpq(0)) for col in cols] for row in A]


def transpose(A: Matrix) -> list[list]:
    return [list(col) for col in zip(*A)]


def identity(n: int) -> list[list]:
    return [[mpq(int(i == j)) for j in range(n)] for i in range(n)]


def inverse(M: Matrix) -> list[list]:
    """Gauss-Jordan inverse; raises ZeroDivisionError when singular."""
    n = len(M)
    aug = [[mpq(c) for c in row] + [mpq(int(i == j)) for j in range(n)] for i, row in enumerate(M)]
    for c in range(n):
        piv = next((i for i in range(c, n) if aug[i][c] != 0), None)
        if piv is None:
            raise ZeroDivisionError("matrix is singular")
        aug[c], aug[piv] = aug[piv], aug[c]
        p = aug[c][c]
        aug[c] = [x / p for x in aug[c]]
        for i in range(n):
            if i != c and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[c])]
    return [row[n:] for row in aug]


def row_echelon(M: Matrix) -> tuple[list[list], list[int]]:
    """Reduced row echelon form over Q and its pivot columns."""
    rows = [[mpq(c) for c in row] for row in M]
    if not rows:
        return [], []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        p = rows[r][c]
        rows[r] = [x / p for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots
