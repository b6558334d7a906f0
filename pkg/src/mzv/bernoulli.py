"""Exact rational arithmetic helpers: Bernoulli numbers and polynomials,
falling factorials, and depth-one zeta values at non-positive integers.

All values are `fractions.Fraction`; the Bernoulli convention is fixed to
B_1 = -1/2, i.e. the generating series t/(e^t - 1).
"""
from __future__ import annotations

import threading
from fractions import Fraction
from math import comb, factorial

Rational = Fraction

RIEMANN = "riemann"
ZERO_INCLUSIVE = "zero-inclusive"

_CONVENTIONS = (RIEMANN, ZERO_INCLUSIVE)


class BernoulliTable:
    """Memoized Bernoulli numbers B_0, B_1, ... (B_1 = -1/2).

    Safe for concurrent readers: the cache only grows, guarded by a lock.
    """

    def __init__(self):
        self._cache = [Fraction(1)]
        self._lock = threading.Lock()

    def __call__(self, k: int) -> Fraction:
        if k < 0:
            raise ValueError("Bernoulli index must be >= 0")
        if k >= len(self._cache):
            with self._lock:
                self._extend(k)
        return self._cache[k]

    def _extend(self, k):
        # sum_{i=0}^{m} C(m+1, i) B_i = 0 for m >= 1, solved for B_m
        cache = self._cache
        for m in range(len(cache), k + 1):
            acc = sum(comb(m + 1, i) * cache[i] for i in range(m))
            cache.append(Fraction(-acc, m + 1))


_TABLE = BernoulliTable()


def bernoulli(k: int) -> Fraction:
    """B_k in the B_1 = -1/2 convention."""
    return _TABLE(k)


def bernoulli_poly(k: int, x: Rational) -> Fraction:
    """B_k(x) = sum_{i=0}^{k} C(k,i) B_{k-i} x^i."""
    if k < 0:
        raise ValueError("degree must be >= 0")
    x = Fraction(x)
    acc = Fraction(0)
    xp = Fraction(1)
    for i in range(k + 1):
        acc += comb(k, i) * bernoulli(k - i) * xp
        xp *= x
    return acc


def falling_factorial(a: Rational, j: int) -> Fraction:
    """[a]_j = a(a-1)...(a-j+1); [a]_0 = 1; [a]_{-1} = 1/(a+1)."""
    if j < -1:
        raise ValueError("falling factorial defined for j >= -1")
    a = Fraction(a)
    if j == -1:
        if a == -1:
            raise ZeroDivisionError("[a]_{-1} undefined at a = -1")
        return 1 / (a + 1)
    acc = Fraction(1)
    for i in range(j):
        acc *= a - i
    return acc


def zeta1_neg(a: int, v: Rational = 0, convention: str = RIEMANN) -> Fraction:
    """zeta(-a; v) for a >= 0, through Bernoulli polynomials.

    riemann: -B_{a+1}(v+1)/(a+1), the analytic continuation of
    sum_{n>=1} (n+v)^{-s}; gives zeta(0) = -1/2.
    zero-inclusive: -B_{a+1}(v)/(a+1), the n >= 0 (Hurwitz) normalization;
    gives +1/2 at a = 0, v = 0. The two agree for a >= 1 at v = 0.
    """
    if a < 0:
        raise ValueError("argument must be a non-positive integer, got -a with a < 0")
    if convention not in _CONVENTIONS:
        raise ValueError(f"unknown convention {convention!r}")
    v = Fraction(v)
    shift = v + 1 if convention == RIEMANN else v
    return Fraction(-1, a + 1) * bernoulli_poly(a + 1, shift)


def binomial(n: int, k: int) -> int:
    """C(n, k), zero outside 0 <= k <= n."""
    if k < 0 or k > n or n < 0:
        return 0
    return comb(n, k)


__all__ = [
    "Rational",
    "RIEMANN",
    "ZERO_INCLUSIVE",
    "BernoulliTable",
    "bernoulli",
    "bernoulli_poly",
    "falling_factorial",
    "zeta1_neg",
    "binomial",
    "factorial",
]
