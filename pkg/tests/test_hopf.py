import random
from fractions import Fraction

import pytest

from mzv.gz import default_trunc, make_gz_character
from mzv.hopf import (
    BirkhoffPair,
    Character,
    DifferentialPreconditionError,
    birkhoff,
    check_differential,
    check_multiplicativity,
    convolve,
    unit_character,
)
from mzv.laurent import LaurentSeries, PrecisionError, agree
from mzv.ratfunc import RatFunc
from mzv.words import EMPTY, Letter, Word, WordSum, quasi_shuffle, word_d

F = Fraction
L = LaurentSeries
d = RatFunc.delta()


def _gen_word(*ids):
    return Word(tuple(Letter.gen(i) for i in ids))


def _synthetic_char(values, lam=F(1)):
    """Character on generator words defined multiplicatively via per-letter
    series (concatenation-multiplicative is enough for these tests)."""

    def ev(w):
        acc = L.one()
        for letter in w:
            acc = acc * values[letter.gid]
        return acc

    return Character(ev, lam=lam, name="synthetic")


def test_convolution_unit():
    phi = _synthetic_char({"a": L({-1: 1, 0: 3, 1: 1}, trunc=8)})
    e = unit_character()
    w = _gen_word("a", "a")
    assert agree(convolve(e, phi, w), phi(w))
    assert agree(convolve(phi, e, w), phi(w))


def test_convolution_primitive():
    phi = _synthetic_char({"a": L({-1: 1}, trunc=8)})
    psi = _synthetic_char({"a": L({0: 2, 1: 5}, trunc=8)})
    w = _gen_word("a")
    out = convolve(phi, psi, w)
    assert agree(out, phi(w) + psi(w))  # f(1)g(w) + f(w)g(1)


def test_birkhoff_primitive_example():
    phi = _synthetic_char({"a": L({-1: 1, 0: 3, 1: 1}, trunc=8)})
    pair = birkhoff(phi)
    w = _gen_word("a")
    assert pair.minus(w).coeffs == {-1: F(-1)}
    assert pair.plus(w).coeffs == {0: F(3), 1: F(1)}


def test_birkhoff_holomorphic_character():
    phi = _synthetic_char({"a": L({0: 2, 3: 1}, trunc=9)})
    pair = birkhoff(phi)
    for w in (_gen_word("a"), _gen_word("a", "a")):
        assert pair.minus(w).is_zero()
        assert agree(pair.plus(w), phi(w))


def test_gz_depth_two_corner():
    # phi_+ of the double word at arguments (0,0), directions (delta, delta):
    # eps^0 coefficient is 3/8 and delta-free
    w = Word.from_sr([(0, d), (0, d)])
    phi = make_gz_character(default_trunc(0, 2))
    pair = birkhoff(phi)
    fp = pair.plus(w).finite_part()
    assert RatFunc._coerce(fp) == RatFunc.from_rational(F(3, 8))
    minus = pair.minus(w)
    assert set(minus.coeffs) == {-2, -1}


def test_support_conditions():
    w = Word.from_sr([(0, d), (-1, d)])
    phi = make_gz_character(default_trunc(1, 2))
    pair = birkhoff(phi)
    for word in (w, w[:1], w[1:]):
        m = pair.minus(word)
        p = pair.plus(word)
        assert agree(m, m.pi_minus())
        assert agree(p, p.pi_plus())
        assert all(e < 0 for e in m.coeffs)
        assert all(e >= 0 for e in p.coeffs)


def test_reconstruction_convolution():
    # phi_- * phi = phi_+ on every tested word
    phi = make_gz_character(default_trunc(3, 2))
    pair = birkhoff(phi)
    words = [
        Word.from_sr([(0, d)]),
        Word.from_sr([(-1, F(2))]),
        Word.from_sr([(0, d), (-1, d)]),
        Word.from_sr([(-2, F(1)), (-1, F(3, 2))]),
    ]
    for w in words:
        assert agree(convolve(pair.minus, phi, w), pair.plus(w))


def test_multiplicativity_depth_one_pairs(rng):
    phi = make_gz_character(default_trunc(6, 2))
    pair = birkhoff(phi)
    for _ in range(20):
        u = Word.from_sr([(-rng.randint(0, 3), F(rng.randint(1, 4)))])
        v = Word.from_sr([(-rng.randint(0, 3), F(rng.randint(1, 4)))])
        assert check_multiplicativity(pair, u, v)


def test_multiplicativity_unit():
    phi = make_gz_character(default_trunc(1, 1))
    pair = birkhoff(phi)
    v = Word.from_sr([(-1, F(2))])
    assert check_multiplicativity(pair, EMPTY, v)


def test_corrupted_counterterm_detected():
    phi = make_gz_character(default_trunc(2, 2))
    pair = birkhoff(phi)
    u = Word.from_sr([(0, F(1))])
    v = Word.from_sr([(-1, F(2))])
    assert check_multiplicativity(pair, u, v)
    # corrupt phi_- on the merged letter and watch multiplicativity fail
    merged = Word.from_sr([(-1, F(3))])
    bad = pair.minus(merged) + L.monomial(-1, F(1, 7))
    pair._minus[merged] = bad
    pair._plus.pop(merged, None)
    pair._bar.pop(merged, None)
    assert not check_multiplicativity(pair, u, v)


def test_determinism_under_permuted_memo_order(rng):
    words = [
        Word.from_sr([(0, d)]),
        Word.from_sr([(0, d), (0, d)]),
        Word.from_sr([(-1, d), (0, d)]),
        Word.from_sr([(-2, d), (-1, d)]),
    ]
    t = default_trunc(3, 2)
    results = []
    for order in (words, list(reversed(words)), rng.sample(words, len(words))):
        pair = birkhoff(make_gz_character(t))
        vals = {}
        for w in order:
            vals[w] = pair.plus(w)
        results.append(vals)
    for w in words:
        assert results[0][w] == results[1][w] == results[2][w]


def test_precision_error_names_word():
    phi = _synthetic_char({"a": L({-1: 1}, trunc=0)})
    pair = birkhoff(phi)
    with pytest.raises(PrecisionError, match="g\\[a\\]"):
        pair.plus(_gen_word("a"))


def test_differential_depth_one():
    phi = make_gz_character(20)
    pair = birkhoff(phi)
    w = Word.from_sr([(-1, F(3, 2))])
    assert check_differential(phi, pair, w)
    assert check_differential(phi, pair, EMPTY)


def test_differential_depth_two():
    phi = make_gz_character(20)
    pair = birkhoff(phi)
    w = Word.from_sr([(0, d), (-1, d)])
    assert check_differential(phi, pair, w)


def test_differential_precondition_failure():
    bad = _synthetic_char({None: None})

    def ev(w):
        return L({0: 1}, trunc=10)

    bad = Character(ev, name="bad")
    pair = birkhoff(bad)
    w = Word.from_sr([(-1, F(1))])
    with pytest.raises(DifferentialPreconditionError):
        check_differential(bad, pair, w)
