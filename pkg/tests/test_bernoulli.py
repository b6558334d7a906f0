from fractions import Fraction
from math import comb

import pytest

from mzv.bernoulli import (
    RIEMANN,
    ZERO_INCLUSIVE,
    bernoulli,
    bernoulli_poly,
    falling_factorial,
    zeta1_neg,
)

F = Fraction


def test_bernoulli_first_values():
    assert bernoulli(0) == 1
    assert bernoulli(1) == F(-1, 2)
    assert bernoulli(2) == F(1, 6)
    assert bernoulli(3) == 0
    assert bernoulli(4) == F(-1, 30)
    assert bernoulli(12) == F(-691, 2730)


def test_bernoulli_recurrence_identity():
    # sum_{i=0}^{k} C(k,i) B_i = B_k for k >= 2
    for k in range(2, 41):
        assert sum(comb(k, i) * bernoulli(i) for i in range(k + 1)) == bernoulli(k)


def test_odd_bernoulli_vanish():
    for k in range(3, 41, 2):
        assert bernoulli(k) == 0


def test_bernoulli_poly_degree_one():
    for x in (F(0), F(1), F(2, 3), F(-5, 7)):
        assert bernoulli_poly(1, x) == x - F(1, 2)


def test_bernoulli_poly_at_endpoints():
    for k in range(2, 31):
        assert bernoulli_poly(k, 1) == bernoulli(k)
        assert bernoulli_poly(k, 0) == bernoulli(k)


def test_faulhaber_oracle():
    # (B_{d+1}(n) - B_{d+1})/(d+1) equals the brute sum over m in [0, n)
    for d in range(0, 7):
        for n in range(1, 9):
            brute = sum(F(m) ** d for m in range(n))
            assert (bernoulli_poly(d + 1, n) - bernoulli(d + 1)) / (d + 1) == brute


def test_bernoulli_poly_value_from_faulhaber():
    # B_3(2) is pinned by the Faulhaber oracle: sum_{m=0}^{1} m^2 = 1 = (B_3(2) - B_3)/3
    assert bernoulli_poly(3, 2) == 3


def test_falling_factorial():
    assert falling_factorial(4, 2) == 12
    for a in (F(0), F(3), F(-5, 2)):
        assert falling_factorial(a, 0) == 1
    assert falling_factorial(0, -1) == 1
    assert falling_factorial(F(1, 2), -1) == F(2, 3)
    with pytest.raises(ZeroDivisionError):
        falling_factorial(-1, -1)
    with pytest.raises(ValueError):
        falling_factorial(3, -2)


def test_zeta1_neg_values():
    assert zeta1_neg(1, 0, RIEMANN) == F(-1, 12)
    assert zeta1_neg(0, 0, RIEMANN) == F(-1, 2)
    assert zeta1_neg(0, 0, ZERO_INCLUSIVE) == F(1, 2)
    assert zeta1_neg(3, 0, RIEMANN) == F(1, 120)
    assert zeta1_neg(3, 0, ZERO_INCLUSIVE) == F(1, 120)
    assert zeta1_neg(2, 0) == 0


def test_zeta1_neg_convention_split():
    for a in range(1, 21):
        assert zeta1_neg(a, 0, RIEMANN) == zeta1_neg(a, 0, ZERO_INCLUSIVE)
    assert zeta1_neg(0, 0, ZERO_INCLUSIVE) - zeta1_neg(0, 0, RIEMANN) == 1


def test_zeta1_neg_hurwitz_shift():
    # Riemann normalization sums n >= 1: matches brute Hurwitz-style partial
    # identity sum_{n=1}^{N-1} (n+v)^a = (B_{a+1}(N+v) - B_{a+1}(1+v))/(a+1)
    v = F(1, 3)
    for a in range(0, 5):
        brute = sum((F(n) + v) ** a for n in range(1, 8))
        ident = (bernoulli_poly(a + 1, 8 + v) - bernoulli_poly(a + 1, 1 + v)) / (a + 1)
        assert brute == ident
    with pytest.raises(ValueError):
        zeta1_neg(1, 0, "bogus")
