import pytest
from hypothesis import given, strategies as st

from conftest import exponents
from ginwb import MonomialIdeal, borel_closure, graded_piece, is_revlex_segment, is_strongly_stable, shadow
from ginwb.monomial_ideal import borel_moves, is_borel_closed, minimalize, revlex_sorted
from golden import GIN_4_2, GIN_5_2
from oracles import ideal_piece, monomials, revlex_desc


def test_strongly_stable_examples():
    assert is_strongly_stable(MonomialIdeal([(2, 0, 0, 0), (1, 1, 0, 0), (0, 2, 0, 0), (1, 0, 1, 0)]))
    assert not is_strongly_stable(MonomialIdeal([(2, 0, 0), (1, 0, 1)]))
    assert is_strongly_stable(MonomialIdeal(GIN_5_2))


def brute_strongly_stable(gens, n, top):
    for k in range(top + 1):
        piece = ideal_piece(gens, k, n)
        for m in piece:
            for j in range(n):
                if m[j] == 0:
                    continue
                for i in range(j):
                    e = list(m)
                    e[j] -= 1
                    e[i] += 1
                    if tuple(e) not in piece:
                        return False
    return True


@given(st.integers(1, 3).flatmap(lambda n: st.lists(exponents(n, 3), min_size=1, max_size=4)))
def test_strongly_stable_matches_brute_force(gens):
    n = len(gens[0])
    gens = [g for g in gens if sum(g) > 0] or [(1,) + (0,) * (n - 1)]
    top = max(sum(g) for g in gens) + 1
    assert is_strongly_stable(MonomialIdeal(gens, n)) == brute_strongly_stable(gens, n, top)


def test_graded_piece_examples():
    J = MonomialIdeal([(2, 0)])
    assert graded_piece(J, 3) == {(3, 0), (2, 1)}
    J42 = MonomialIdeal(GIN_4_2)
    assert graded_piece(J42, 2) == {(2, 0, 0, 0), (1, 1, 0, 0), (0, 2, 0, 0), (1, 0, 1, 0)}
    assert graded_piece(J42, 0) == set()


@given(st.integers(1, 4).flatmap(lambda n: st.lists(exponents(n, 3), min_size=1, max_size=5)), st.integers(0, 5))
def test_graded_piece_matches_divisibility(gens, k):
    n = len(gens[0])
    J = MonomialIdeal(gens, n)
    assert {tuple(m) for m in graded_piece(J, k)} == ideal_piece(gens, k, n)


def test_minimalize():
    assert sorted(minimalize([(2, 0), (2, 1), (1, 1), (3, 0)])) == [(1, 1), (2, 0)]


def test_generators_sorted():
    J = MonomialIdeal([(0, 0, 2), (1, 0, 0), (0, 2, 0)])
    assert [tuple(g) for g in J.generators()] == [(1, 0, 0), (0, 2, 0), (0, 0, 2)]


def test_shadow_sizes():
    J42 = MonomialIdeal(GIN_4_2)
    assert len(shadow(J42.graded_piece(2), 4)) == 12
    J52 = MonomialIdeal(GIN_5_2)
    assert len(shadow(J52.graded_piece(2), 5)) == 19
    assert shadow([], 3) == set()
    with pytest.raises(ValueError):
        shadow([(1, 0), (2, 0)], 2)


@given(st.integers(1, 4).flatmap(lambda n: st.lists(exponents(n, 2), min_size=1, max_size=4)))
def test_shadow_is_next_degree_of_ideal(gens):
    n = len(gens[0])
    k = max(sum(g) for g in gens)
    piece = ideal_piece(gens, k, n)
    assert {tuple(m) for m in shadow(piece, n)} == ideal_piece(list(piece), k + 1, n)


def test_revlex_segment():
    ms = revlex_desc(monomials(4, 2))
    assert is_revlex_segment(ms[:4])
    assert not is_revlex_segment([ms[0], ms[1], ms[3]])
    assert is_revlex_segment([])
    # degree-2 part of (x1^2, x1x2, x1x3) in three variables skips x2^2
    assert not is_revlex_segment([(2, 0, 0), (1, 1, 0), (1, 0, 1)])


def test_borel_helpers():
    assert set(borel_moves((0, 1, 1))) == {(1, 0, 1), (0, 2, 0)}
    assert is_borel_closed([(2, 0), (1, 1)])
    assert not is_borel_closed([(1, 1)])
    assert borel_closure([(0, 0, 1)]) == {(1, 0, 0), (0, 1, 0), (0, 0, 1)}


@given(st.integers(1, 4).flatmap(lambda n: st.lists(exponents(n, 3), min_size=1, max_size=3)))
def test_borel_closure_is_closed_and_minimal(ms):
    cl = borel_closure(ms)
    assert is_borel_closed(cl)
    assert set(map(tuple, ms)) <= cl


def test_revlex_sorted():
    ms = monomials(3, 3)
    assert [tuple(m) for m in revlex_sorted(ms)] == revlex_desc(ms)


def test_ideal_equality_ignores_redundant_generators():
    assert MonomialIdeal([(1, 0), (2, 0), (0, 3)]) == MonomialIdeal([(0, 3), (1, 0)])
    assert (1, 1) in MonomialIdeal([(1, 0)])
