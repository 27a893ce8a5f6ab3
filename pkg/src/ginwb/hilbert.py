"""Hilbert functions of equigenerated Artinian complete intersections."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .monomial_ideal import MonomialIdeal


def binom(a: int, b: int) -> int:
    """Binomial coefficient that is 0 whenever ``a < b`` or either is negative."""
    if b < 0 or a < 0 or a < b:
        return 0
    return comb(a, b)


def num_monomials(n: int, k: int) -> int:
    """``|S_k|`` for S a polynomial ring in ``n`` variables."""
    if k < 0:
        return 0
    return binom(k + n - 1, n - 1)


@dataclass(frozen=True)
class HilbertTable:
    """Values ``H(0), H(1), ...`` of a Hilbert function.

    For an (n, d) complete intersection the table runs up to the socle degree
    ``n(d-1)``; ``d`` is None for tables read off arbitrary monomial ideals.
    """

    n: int
    values: tuple
    d: int | None = None

    def __getitem__(self, k: int) -> int:
        if k < 0:
            return 0
        return self.values[k] if k < len(self.values) else 0

    def __len__(self):
        return len(self.values)

    @property
    def socle_degree(self) -> int:
        nz = [k for k, v in enumerate(self.values) if v]
        return nz[-1] if nz else -1

    def ideal_sizes(self) -> tuple:
        """``|J_k| = |S_k| - H(k)`` for each tabulated degree."""
        return tuple(num_monomials(self.n, k) - v for k, v in enumerate(self.values))

    def is_symmetric(self) -> bool:
        s = self.socle_degree
        return all(self[k] == self[s - k] for k in range(s + 1))

    def trimmed(self) -> "HilbertTable":
        """Drop trailing zeros."""
        return HilbertTable(self.n, self.values[: self.socle_degree + 1], self.d)


def ci_hilbert(n: int, d: int, k: int) -> int:
    """Coefficient of ``t^k`` in ``(1 + t + ... + t^(d-1))^n`` by the closed
    three-case formula."""
    if n < 1 or d < 2:
        raise ValueError("need n >= 1 and d >= 2")
    if k < 0:
        return 0
    socle = n * (d - 1)
    if k > socle:
        return 0
    if k > socle // 2:
        # upper half: mirror into the lower half
        k = socle - k
    if k <= d - 1:
        return binom(k + n - 1, n - 1)
    j = k - d
    value = binom(k + n - 1, n - 1) - n * binom(j + n - 1, n - 1)
    # the two terms above are exact only while k < 2d; beyond that the
    # inclusion-exclusion over "x_i^d divides" continues
    i = 2
    while i * d <= k and i <= n:
        value += (-1) ** i * binom(n, i) * binom(k - i * d + n - 1, n - 1)
        i += 1
    return value


def ci_hilbert_two_term(n: int, d: int, k: int) -> int:
    """The middle case truncated after its first two terms (valid for k < 2d)."""
    j = k - d
    return binom(k + n - 1, n - 1) - n * binom(j + n - 1, n - 1)


def ci_hilbert_truncated(n: int, d: int, k: int) -> int:
    """The three-case formula with the middle case cut after two terms.

    Differs from :func:`ci_hilbert` exactly where the reflected degree is at
    least ``2d``.
    """
    if n < 1 or d < 2:
        raise ValueError("need n >= 1 and d >= 2")
    socle = n * (d - 1)
    if k < 0 or k > socle:
        return 0
    if k > socle // 2:
        k = socle - k
    if k <= d - 1:
        return binom(k + n - 1, n - 1)
    return ci_hilbert_two_term(n, d, k)


def ci_ideal_size(n: int, d: int, k: int) -> int:
    """Number of degree-``k`` monomials in any monomial ideal with the (n, d)
    complete intersection Hilbert function, as ``|S_k| - H(k)``."""
    return num_monomials(n, k) - ci_hilbert(n, d, k)


def ci_table(n: int, d: int) -> HilbertTable:
    return HilbertTable(n, tuple(ci_hilbert(n, d, k) for k in range(n * (d - 1) + 1)), d)


def series_oracle(n: int, d: int) -> tuple:
    """Coefficients of ``(1 + t + ... + t^(d-1))^n`` by repeated convolution."""
    if n < 1 or d < 1:
        raise ValueError("need n >= 1 and d >= 1")
    coeffs = [1]
    for _ in range(n):
        out = [0] * (len(coeffs) + d - 1)
        for i, c in enumerate(coeffs):
            for j in range(d):
                out[i + j] += c
        coeffs = out
    return tuple(coeffs)


def hilbert_from_ideal(J: MonomialIdeal, up_to: int) -> HilbertTable:
    """Count standard monomials of ``S/J`` in degrees ``0..up_to``."""
    vals = tuple(num_monomials(J.n, k) - len(J.graded_piece(k)) for k in range(up_to + 1))
    return HilbertTable(J.n, vals)
