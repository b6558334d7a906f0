import json
import random
from fractions import Fraction

import pytest

from mzv.laurent import (
    LaurentSeries,
    NonInvertibleError,
    PrecisionError,
    agree,
    exp_linear,
)
from mzv.ratfunc import RatFunc

from conftest import rand_fraction, rand_series

F = Fraction
L = LaurentSeries


def test_mul_monomials():
    a = L.monomial(-1)
    b = L.monomial(1)
    assert (a * b) == L.one()


def test_square_of_depth_one_kernel():
    # (-1/eps - 1/2 - eps/12)^2 = 1/eps^2 + 1/eps + 5/12 + O(eps)
    a = L({-1: -1, 0: F(-1, 2), 1: F(-1, 12)}, trunc=2)
    sq = a * a
    assert sq.trunc == 1
    assert sq.coeffs == {-2: F(1), -1: F(1), 0: F(5, 12)}


def test_add_keeps_smaller_trunc():
    a = L({0: 1}, trunc=5)
    b = L({1: 2}, trunc=3)
    out = a + b
    assert out.trunc == 3
    assert out.coeffs == {0: F(1), 1: F(2)}


def test_mul_trunc_contract():
    a = L({-2: 1, 1: 1}, trunc=4)   # val -2
    b = L({3: 5}, trunc=7)          # val 3
    out = a * b
    assert out.trunc == min(4 + 3, 7 - 2)


def test_inv_unit_geometric():
    a = L({0: 1, 1: -1}, trunc=6)  # 1 - eps
    inv = a.inv_unit()
    assert inv.coeffs == {k: F(1) for k in range(6)}
    assert agree(a * inv, L.one())


def test_inv_unit_monomial():
    assert L.monomial(1).inv_unit(trunc=4).coeffs == {-1: F(1)}


def test_inv_unit_multiply_back():
    # 1 - e^{mu eps} has valuation 1; check a * a^{-1} = 1 up to truncation
    mu = F(3, 2)
    a = L.one() - exp_linear(mu, 12)
    inv = a.inv_unit()
    assert inv.valuation() == -1
    assert agree(a * inv, L.one())


def test_inv_unit_errors():
    with pytest.raises(NonInvertibleError):
        L.zero(trunc=5).inv_unit()
    with pytest.raises(ValueError):
        L({0: 1}).inv_unit()  # exact input needs explicit truncation


def test_exp_linear():
    assert exp_linear(0, 5).coeffs == {0: F(1)}
    assert exp_linear(1, 4).coeffs == {0: 1, 1: 1, 2: F(1, 2), 3: F(1, 6)}


def test_exp_linear_functional_equation(rng):
    for _ in range(20):
        a = rand_fraction(rng)
        b = rand_fraction(rng)
        lhs = exp_linear(a, 8) * exp_linear(b, 8)
        assert agree(lhs, exp_linear(a + b, 8))


def test_pi_minus_examples():
    a = L({-2: 1, 0: 3, 1: 1}, trunc=4)
    pm = a.pi_minus()
    assert pm.coeffs == {-2: F(1)}
    assert pm.trunc is None
    assert L({0: 1, 2: 5}, trunc=3).pi_minus().is_zero()
    assert agree(pm.pi_minus(), pm)


def test_pi_minus_rota_baxter_weight_minus_one(rng):
    # Pi(x)Pi(y) - Pi(x Pi(y)) - Pi(Pi(x) y) + Pi(xy) = 0, exactly
    for _ in range(200):
        x = rand_series(rng, trunc=6)
        y = rand_series(rng, trunc=6)
        px, py = x.pi_minus(), y.pi_minus()
        lhs = px * py - (x * py).pi_minus() - (px * y).pi_minus() + (x * y).pi_minus()
        assert not lhs.coeffs


def test_pi_decomposition():
    a = L({-1: 2, 0: 3, 2: 4}, trunc=5)
    assert agree(a.pi_minus() + a.pi_plus(), a)


def test_finite_part():
    a = L({-1: -1, 0: F(-1, 2), 1: F(-1, 12)}, trunc=2)
    assert a.finite_part() == F(-1, 2)
    assert L({-3: 7}, trunc=1).finite_part() == 0
    assert L({0: F(3, 8)}, trunc=1).finite_part() == F(3, 8)
    with pytest.raises(PrecisionError):
        L({-1: 1}, trunc=0).finite_part()


def test_d_epsilon():
    assert L({2: 1}).d_epsilon().coeffs == {1: F(2)}
    assert L({-1: 1}).d_epsilon().coeffs == {-2: F(-1)}
    a = L({0: 5}, trunc=3)
    assert a.d_epsilon().trunc == 2


def test_d_epsilon_is_derivation(rng):
    for _ in range(60):
        a = rand_series(rng, trunc=6)
        b = rand_series(rng, trunc=6)
        lhs = (a * b).d_epsilon()
        rhs = a.d_epsilon() * b + a * b.d_epsilon()
        assert agree(lhs, rhs)


def test_d_epsilon_commutes_with_pi(rng):
    for _ in range(60):
        a = rand_series(rng, trunc=6)
        assert agree(a.pi_minus().d_epsilon(), a.d_epsilon().pi_minus())


def test_mul_assoc_comm(rng):
    for _ in range(40):
        a = rand_series(rng, trunc=5)
        b = rand_series(rng, trunc=5)
        c = rand_series(rng, trunc=5)
        assert agree(a * b, b * a)
        assert agree((a * b) * c, a * (b * c))


def test_ratfunc_coefficients_mix():
    dlt = RatFunc.delta()
    a = L({-1: dlt.inverse(), 0: F(1, 2)}, trunc=2)
    b = L({1: dlt}, trunc=4)
    out = a * b
    assert out.coeffs[0] == RatFunc.from_rational(1)


def test_json_round_trip():
    a = L({-2: F(1, 3), 0: F(-5, 7), 3: 2}, trunc=5)
    blob = json.dumps(a.to_json())
    back = L.from_json(json.loads(blob))
    assert back == a
    assert a.to_json()["terms"] == [[-2, "1/3"], [0, "-5/7"], [3, "2"]]


def test_str_smoke():
    assert "O(eps" in str(L({0: 1}, trunc=1))
