import random
from math import comb, factorial, prod

import pytest
from hypothesis import given, settings, strategies as st

from conftest import random_form
from ginwb import (
    ArityMismatch,
    ChangeOfCoordinates,
    Polynomial,
    b_matrix,
    cauchy_binet_delta,
    coefficient_matrix,
    evaluate_criterion,
    g_coefficient,
    g_matrix,
    is_revlex_segment,
    specialization_checks,
    random_change,
)
from ginwb.algebra import apply_to_all, degree_exponents
from ginwb.criterion import segment_matches_determinant
from oracles import as_fractions, frac, leibniz_det, macaulay_initial_piece, matmul, substitute


def powers(n, d):
    return [Polynomial.from_monomial(tuple(d if j == i else 0 for j in range(n))) for i in range(n)]


def random_rows(rng, n, bound=9):
    return [[rng.randint(-bound, bound) for _ in range(n)] for _ in range(n)]


def test_powers_give_nonzero_delta():
    for n, d in [(2, 2), (3, 2), (3, 3), (4, 2)]:
        C = random_change(n, 11)
        assert coefficient_matrix(powers(n, d), C).determinant != 0


def test_identity_on_leading_monomials():
    n, d = 3, 2
    forms = [Polynomial.from_monomial(u) for u in degree_exponents(n, d)[:n]]
    A = coefficient_matrix(forms, ChangeOfCoordinates.identity(n))
    assert A.entries == ((1, 0, 0), (0, 1, 0), (0, 0, 1))
    assert A.determinant == 1


def test_repeated_form_gives_zero():
    f = Polynomial({(2, 0, 0): 1, (0, 1, 1): 3}, 3)
    forms = [f, f, Polynomial.from_monomial((0, 0, 2))]
    assert coefficient_matrix(forms, random_change(3, 1)).determinant == 0


def test_form_count_and_degree_checked():
    with pytest.raises(ArityMismatch):
        coefficient_matrix(powers(3, 2)[:2], random_change(3, 1))
    mixed = [Polynomial.from_monomial((2, 0)), Polynomial.from_monomial((0, 3))]
    with pytest.raises(ArityMismatch):
        coefficient_matrix(mixed, random_change(2, 1))


def test_g_known_entries():
    rng = random.Random(5)
    for n, d in [(2, 2), (3, 2), (3, 3)]:
        rows = random_rows(rng, n)
        assert g_coefficient(1, 1, rows, n, d) == rows[0][0] ** d
        k2 = comb(2 + d - 1, d)  # position of x2^d
        assert g_coefficient(k2, 2, rows, n, d) == d * rows[1][0] ** (d - 1) * rows[1][1]


def test_g_identity():
    n, d = 3, 2
    N = comb(n + d - 1, n - 1)
    I = ChangeOfCoordinates.identity(n)
    for k in range(1, N + 1):
        for l in range(1, N + 1):
            assert g_coefficient(k, l, I, n, d) == int(k == l)
    with pytest.raises(IndexError):
        g_coefficient(0, 1, I, n, d)


@pytest.mark.parametrize("n,d", [(1, 2), (2, 2), (2, 3), (3, 2), (3, 3)])
def test_g_formula_matches_direct_expansion(n, d):
    rng = random.Random(100 * n + d)
    rows = random_rows(rng, n)
    basis = degree_exponents(n, d)
    for k, uk in enumerate(basis, start=1):
        image = substitute({tuple(uk): 1}, rows)
        for l, ul in enumerate(basis, start=1):
            assert frac(g_coefficient(k, l, rows, n, d)) == image.get(tuple(ul), 0)


@settings(max_examples=30)
@given(st.integers(0, 10**6))
def test_a_equals_b_times_g(seed):
    rng = random.Random(seed)
    n, d = rng.choice([(2, 2), (2, 3), (3, 2), (3, 3)])
    forms = [random_form(rng, n, d, bound=6) for _ in range(n)]
    rows = random_rows(rng, n, 5)
    B = b_matrix(forms)
    G = g_matrix(rows, n, d)
    BG = matmul(B.entries, G.entries)
    A = coefficient_matrix(forms, rows)
    assert [[frac(x) for x in r] for r in A.entries] == BG


def test_b_matrix_round_trip():
    rng = random.Random(2)
    forms = [random_form(rng, 3, 2) for _ in range(3)]
    assert b_matrix(forms).reconstruct() == forms


def test_cauchy_binet_square_case():
    rng = random.Random(3)
    B = random_rows(rng, 3)
    G = random_rows(rng, 3)
    assert frac(cauchy_binet_delta(B, G)) == leibniz_det(B) * leibniz_det(G)


@pytest.mark.parametrize("seed", range(100))
def test_cauchy_binet_random(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 3)
    N = rng.randint(n, 6)
    B = [[rng.randint(-5, 5) for _ in range(N)] for _ in range(n)]
    G = [[rng.randint(-5, 5) for _ in range(n)] for _ in range(N)]
    assert frac(cauchy_binet_delta(B, G)) == leibniz_det(matmul(B, G))


def test_cauchy_binet_equals_delta():
    forms = powers(2, 2)
    C = random_change(2, 8, coeff_bound=50)
    delta = cauchy_binet_delta(b_matrix(forms), g_matrix(C, 2, 2))
    assert delta == coefficient_matrix(forms, C).determinant


def test_cauchy_binet_shape_check():
    with pytest.raises(ValueError):
        cauchy_binet_delta([[1, 2, 3]], [[1], [2]])


def test_first_column_for_squares():
    rows = [[3, -1], [4, 7]]
    A = coefficient_matrix(powers(2, 2), rows)
    assert A.entries[0][0] == 9 and A.entries[1][0] == 16
    rep = specialization_checks(powers(2, 2), rows)
    assert rep.ok and rep.ratios == {1: 1, 2: 2}


def multinomial(alpha):
    return factorial(sum(alpha)) // prod(factorial(a) for a in alpha)


@pytest.mark.parametrize("seed", range(50))
def test_specialization_identities_random(seed):
    rng = random.Random(seed)
    n, d = rng.choice([(2, 2), (2, 3), (3, 2), (3, 3), (4, 2)])
    forms = [random_form(rng, n, d, bound=6) for _ in range(n)]
    rows = random_rows(rng, n, 6)
    rep = specialization_checks(forms, rows)
    point = [r[0] for r in rows]
    assert list(rep.first_column) == [f.evaluate(point) for f in forms]
    basis = degree_exponents(n, d)
    for l, r in rep.ratios.items():
        if r is not None:
            assert r == multinomial(basis[l - 1])


def test_evaluate_criterion_report():
    rep = evaluate_criterion(powers(3, 2), trials=3, seed=42)
    assert rep.nonzero and rep.delta != 0
    assert rep.seeds == (42,)
    assert rep.verdict.startswith("revlex")
    degenerate = [Polynomial.from_monomial(m) for m in [(2, 0, 0), (1, 1, 0), (1, 0, 1)]]
    bad = evaluate_criterion(degenerate, trials=3, kind="upper-triangular")
    assert not bad.nonzero and bad.deltas == (0, 0, 0)
    assert bad.verdict == "criterion fails at all sampled points"


@settings(max_examples=40)
@given(st.integers(0, 10**6))
def test_determinant_decides_degree_d_piece(seed):
    # at one fixed substitution, in(F)_d is the revlex segment iff the block is invertible
    rng = random.Random(seed)
    n, d = rng.choice([(2, 2), (3, 2), (2, 3)])
    forms = [random_form(rng, n, d, bound=2, density=0.4) for _ in range(n)]
    if any(f.is_zero() for f in forms):
        return
    rows = random_rows(rng, n, 1)
    A = coefficient_matrix(forms, rows)
    F = [as_fractions(f) for f in apply_to_all(forms, rows)]
    F = [f for f in F if f]
    piece = macaulay_initial_piece(F, d) if F else set()
    if len(piece) != n:
        assert A.determinant == 0
        return
    assert segment_matches_determinant(A.determinant, piece)
    assert (A.determinant != 0) == is_revlex_segment(piece)
