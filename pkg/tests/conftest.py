import random

import pytest
from gmpy2 import mpq
from hypothesis import strategies as st

from calogero.exactpoly import Poly
from calogero.params import Params, generic_params

ALL_GENERIC = [p for fam in "AB" for p in generic_params(fam)]


def random_poly(rng: random.Random, N: int, max_deg: int, nterms: int = 4) -> Poly:
    """A random polynomial with small rational coefficients."""
    terms = {}
    for _ in range(nterms):
        d = rng.randint(0, max_deg)
        exp = [0] * N
        for _ in range(d):
            exp[rng.randrange(N)] += 1
        terms[tuple(exp)] = mpq(rng.randint(-9, 9), rng.randint(1, 5))
    return Poly(N, terms)


@st.composite
def polys(draw, N=None, max_deg=5, max_terms=5):
    n = draw(st.integers(1, 4)) if N is None else N
    exps = st.lists(st.integers(0, max_deg), min_size=n, max_size=n).map(tuple)
    coeffs = st.fractions(min_value=-10, max_value=10, max_denominator=7)
    terms = draw(st.dictionaries(exps, coeffs, max_size=max_terms))
    return Poly(n, {e: mpq(c.numerator, c.denominator) for e, c in terms.items() if sum(e) <= max_deg})


@pytest.fixture
def rng():
    return random.Random(20240607)


@pytest.fixture
def pA():
    return Params("A", "3/7", omega="1/2")


@pytest.fixture
def pB():
    return Params("B", "3/7", "2/5", "1/2")
