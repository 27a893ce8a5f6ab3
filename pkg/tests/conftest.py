import random

import pytest
from hypothesis import HealthCheck, settings, strategies as st

from ginwb import Polynomial

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


def exponents(n, max_deg=4):
    return st.lists(st.integers(0, max_deg), min_size=n, max_size=n).map(tuple)


@st.composite
def monomial_pairs(draw, max_n=5):
    n = draw(st.integers(1, max_n))
    return n, draw(exponents(n)), draw(exponents(n))


@st.composite
def polynomials(draw, n=None, max_terms=5, max_deg=3, homogeneous_degree=None):
    if n is None:
        n = draw(st.integers(1, 4))
    terms = {}
    for _ in range(draw(st.integers(0, max_terms))):
        if homogeneous_degree is None:
            e = draw(exponents(n, max_deg))
        else:
            parts = draw(st.lists(st.integers(0, n - 1), min_size=homogeneous_degree, max_size=homogeneous_degree))
            e = tuple(parts.count(i) for i in range(n))
        terms[e] = draw(st.fractions(min_value=-20, max_value=20, max_denominator=6))
    return Polynomial(terms, n)


def random_form(rng, n, d, bound=10, density=1.0):
    from oracles import monomials

    terms = {m: rng.randint(-bound, bound) for m in monomials(n, d) if rng.random() < density}
    return Polynomial(terms, n)


@pytest.fixture
def rng():
    return random.Random(1234)


# acceptance summary ----------------------------------------------------

ACCEPTANCE_RESULTS: dict = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_RESULTS):
        terminalreporter.write_line(ACCEPTANCE_RESULTS[key])
