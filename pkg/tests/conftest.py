import random
from fractions import Fraction

import pytest

from mzv.laurent import LaurentSeries
from mzv.ratfunc import RatFunc


def rand_fraction(rng, lo=-6, hi=6, den_max=5):
    num = rng.randint(lo, hi)
    den = rng.randint(1, den_max)
    return Fraction(num, den)


def rand_series(rng, exp_lo=-5, exp_hi=5, trunc=None, n_terms=4):
    coeffs = {}
    for _ in range(n_terms):
        e = rng.randint(exp_lo, exp_hi)
        c = rand_fraction(rng)
        if c:
            coeffs[e] = c
    return LaurentSeries(coeffs, trunc)


def rand_ratfunc(rng, deg=2):
    num = [rand_fraction(rng, -4, 4, 3) for _ in range(deg + 1)]
    rf = RatFunc.poly(num)
    if not rf:
        rf = RatFunc.from_rational(1)
    den_roots = rng.sample([-2, -1, 1, 2, 3], rng.randint(0, 2))
    for r in den_roots:
        rf = rf / RatFunc.poly([-r, 1])
    return rf


@pytest.fixture
def rng():
    return random.Random(20240809)
