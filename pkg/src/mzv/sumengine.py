"""Closed-form summation for exponential polynomials sum c(eps) n^d e^{mu n eps}.

Strict partial sums interpolate sum_{m=1}^{n-1} f(m) exactly as exponential
polynomials in n; infinite sums produce truncated Laurent expansions in eps.
Together they realize nested regularized sums

    Z(<s|r>; eps) = sum_{n_1 > ... > n_k > 0} prod n_i^{-s_i} e^{n_i r_i eps}

for non-positive s_i and positive directions r_i, working innermost out.

All the analytic input reduces to the single expansion

    K(t) = sum_{n >= 1} e^{nt} = e^t/(1 - e^t) = -1/t - 1/2 - sum_{k>=1} B_{k+1} t^k/(k+1)!

whose coefficients are rational; sum_{n>=1} n^d e^{mu n eps} is then the d-th
(1/mu) d/deps derivative of K(mu eps), and the geometric strict partial sum is
(e^{mu eps} - e^{mu eps n})/(1 - e^{mu eps}) with both pieces expressed
through K as well.
"""
from __future__ import annotations

from fractions import Fraction
from math import factorial

from .bernoulli import bernoulli, binomial
from .laurent import LaurentSeries, PrecisionError, exp_linear
from .ratfunc import RatFunc
from .words import DomainError, Word

DEGREE_LIMIT = 16
DEPTH_LIMIT = 4


class DivergentSumError(ArithmeticError):
    """An infinite sum with a zero exponential rate has no regularized value."""


def _norm_rate(r):
    if isinstance(r, RatFunc) and r.is_rational():
        return r.as_rational()
    if not isinstance(r, RatFunc):
        return Fraction(r)
    return r


def _inv_scalar(c):
    return c.inverse() if isinstance(c, RatFunc) else 1 / Fraction(c)


_POW_CACHE: dict = {}


def _rate_pow(rate, j: int):
    if j == 0:
        return Fraction(1)
    key = (rate, j)
    got = _POW_CACHE.get(key)
    if got is None:
        if isinstance(rate, RatFunc):
            got = rate**j if j > 0 else rate.inverse() ** (-j)
        else:
            got = Fraction(rate) ** j
        _POW_CACHE[key] = got
    return got


_KC_CACHE: dict = {-1: Fraction(-1)}


def _kernel_coeff(j: int) -> Fraction:
    got = _KC_CACHE.get(j)
    if got is None:
        got = -bernoulli(j + 1) / factorial(j + 1)
        if j == 0:
            got -= 1
        _KC_CACHE[j] = got
    return got


def kernel_series(rate, trunc: int) -> LaurentSeries:
    """K(rate * eps) as a Laurent series with the given truncation order."""
    out = {}
    for e in range(-1, trunc):
        c = _kernel_coeff(e)
        if c:
            out[e] = c * _rate_pow(rate, e)
    return LaurentSeries(out, trunc)


def power_sum_series(d: int, rate, trunc: int) -> LaurentSeries:
    """sum_{n>=1} n^d e^{rate n eps} = ((1/rate) d/deps)^d K(rate eps)."""
    if not rate:
        raise DivergentSumError("zero rate: sum_{n>=1} n^d diverges with no regulator")
    out = {}
    for e in range(-1 - d, trunc):
        ff = 1
        for i in range(e + 1, e + d + 1):
            ff *= i
        if not ff:
            continue
        c = _kernel_coeff(e + d)
        if c:
            out[e] = (ff * c) * _rate_pow(rate, e)
    return LaurentSeries(out, trunc)


class ExpPoly:
    """Canonical finite sum of terms coeff(eps) * n^degree * e^{rate n eps}."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        cleaned = {}
        if terms:
            for (d, rate), coeff in (terms.items() if isinstance(terms, dict) else terms):
                rate = _norm_rate(rate)
                key = (d, rate)
                cleaned[key] = cleaned[key] + coeff if key in cleaned else coeff
        self.terms = {k: c for k, c in cleaned.items() if c.coeffs}

    @staticmethod
    def term(coeff: LaurentSeries, degree: int = 0, rate=Fraction(0)) -> "ExpPoly":
        return ExpPoly({(degree, _norm_rate(rate)): coeff})

    @staticmethod
    def zero() -> "ExpPoly":
        return ExpPoly()

    def __add__(self, other):
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out[k] + c if k in out else c
        return ExpPoly(out)

    def __mul__(self, other: "ExpPoly") -> "ExpPoly":
        out = {}
        for (d1, r1), c1 in self.terms.items():
            for (d2, r2), c2 in other.terms.items():
                key = (d1 + d2, _norm_rate(r1 + r2))
                c = c1 * c2
                out[key] = out[key] + c if key in out else c
        return ExpPoly(out)

    def scale_series(self, series: LaurentSeries) -> "ExpPoly":
        return ExpPoly({k: c * series for k, c in self.terms.items()})

    def shift(self, degree: int, rate) -> "ExpPoly":
        """Multiply by n^degree e^{rate n eps}."""
        return ExpPoly({(d + degree, _norm_rate(r + rate)): c for (d, r), c in self.terms.items()})

    def d_eps(self) -> "ExpPoly":
        """Derivative in eps; raises the degree through the e^{rate n eps} factor."""
        out = []
        for (d, rate), c in self.terms.items():
            out.append(((d, rate), c.d_epsilon()))
            if rate:
                out.append(((d + 1, rate), c.scale(rate)))
        return ExpPoly(out)

    def evaluate_at(self, n: int, trunc: int) -> LaurentSeries:
        """Substitute the integer n, expanding each e^{rate n eps}."""
        acc = LaurentSeries.zero()
        for (d, rate), c in self.terms.items():
            factor = LaurentSeries.from_scalar(Fraction(n**d))
            if rate:
                factor = factor * exp_linear(rate * n, trunc)
            acc = acc + c * factor
        return acc

    def max_degree(self) -> int:
        return max((d for d, _ in self.terms), default=0)

    def __eq__(self, other):
        return isinstance(other, ExpPoly) and self.terms == other.terms

    def __repr__(self):
        if not self.terms:
            return "ExpPoly(0)"
        bits = []
        for (d, rate), c in sorted(self.terms.items(), key=lambda t: (t[0][0], str(t[0][1]))):
            bits.append(f"({c}) n^{d} exp[({rate}) n eps]")
        return "ExpPoly(" + " + ".join(bits) + ")"


def exppoly_mul(a: ExpPoly, b: ExpPoly) -> ExpPoly:
    return a * b


def _faulhaber_strict(d: int):
    """Coefficients q_i with sum_{m=1}^{n-1} m^d = sum_i q_i n^i, exactly."""
    # (B_{d+1}(n) - B_{d+1})/(d+1); the i = 0 Bernoulli term cancels, and the
    # m = 0 contribution is removed for d = 0.
    out = {}
    for i in range(1, d + 2):
        q = Fraction(binomial(d + 1, i), d + 1) * bernoulli(d + 1 - i)
        if q:
            out[i] = q
    if d == 0:
        out[0] = Fraction(-1)
    return out


def qsum_strict(f: ExpPoly, trunc: int = 24) -> ExpPoly:
    """g with g(n) = sum_{m=1}^{n-1} f(m) for every integer n >= 1.

    `trunc` is the truncation order used for fresh kernel expansions; rate-0
    (Faulhaber) contributions are exact and ignore it.
    """
    acc = ExpPoly.zero()
    for (d, rate), coeff in f.terms.items():
        if d > DEGREE_LIMIT:
            raise DomainError(f"degree {d} exceeds the configured limit {DEGREE_LIMIT}")
        if not rate:
            for i, q in _faulhaber_strict(d).items():
                acc = acc + ExpPoly.term(coeff.scale(q), i, Fraction(0))
            continue
        k = kernel_series(rate, trunc + d)
        # G_0(n) = K(mu eps) - (1 + K(mu eps)) e^{mu eps n}
        pure = ExpPoly(
            {
                (0, Fraction(0)): k,
                (0, _norm_rate(rate)): -(LaurentSeries.one() + k),
            }
        )
        inv = _inv_scalar(rate)
        for _ in range(d):
            pure = ExpPoly({key: c.scale(inv) for key, c in pure.d_eps().terms.items()})
        acc = acc + ExpPoly({key: c * coeff for key, c in pure.terms.items()})
    return acc


def full_sum(f: ExpPoly, trunc: int = 24) -> LaurentSeries:
    """sum_{n >= 1} f(n) as a truncated Laurent series.

    Every term must carry a nonzero rate; the pole order of a degree-d term
    is at most d + 1.
    """
    acc = LaurentSeries.zero()
    for (d, rate), coeff in f.terms.items():
        if not rate:
            raise DivergentSumError(
                f"term of degree {d} has rate 0; the regularized sum diverges"
            )
        val = min(coeff.coeffs) if coeff.coeffs else 0
        s = power_sum_series(d, rate, trunc - min(val, 0) + 1)
        acc = acc + coeff * s
    return acc


def _direction_positive(r) -> bool:
    """Positive rationals, or elements of Q[delta] positive as delta -> 0+."""
    if isinstance(r, RatFunc):
        if r.den:
            return False
        den, coeffs = r.num
        for c in coeffs:
            if c:
                return c > 0
        return False
    return Fraction(r) > 0


_NESTED_CACHE: dict = {}


def nested_regularized_sum(word: Word, trunc: int = 24) -> LaurentSeries:
    """Exact truncated expansion of the directional regularized nested sum.

    The word letters are <s_i | r_i> with s_i <= 0 and r_i > 0 (or positive
    as delta -> 0+), outermost first; evaluation runs innermost out through
    qsum_strict and finishes with full_sum.
    """
    if not word:
        return LaurentSeries.one()
    if word.kind != "zr":
        raise DomainError("nested sums take weighted-pair words")
    if len(word) > DEPTH_LIMIT:
        raise DomainError(f"depth {len(word)} exceeds the configured limit {DEPTH_LIMIT}")
    for letter in word:
        if letter.s > 0:
            raise DomainError(f"letter {letter} has positive exponent; out of domain")
        if not _direction_positive(letter.r):
            raise DomainError(f"letter {letter} has a non-positive direction")

    key = (word, trunc)
    got = _NESTED_CACHE.get(key)
    if got is not None:
        return got

    weight = word.weight()
    depth = len(word)
    work = trunc + weight + depth + 6
    letters = list(word)
    inner = letters[-1]
    f = ExpPoly.term(LaurentSeries.one(), -inner.s, inner.r)
    for letter in reversed(letters[:-1]):
        f = qsum_strict(f, work).shift(-letter.s, letter.r)
    out = full_sum(f, trunc)
    if out.trunc is not None and out.trunc < trunc:
        raise PrecisionError(
            f"nested sum of {word} only determined to order {out.trunc} < {trunc}"
        )
    out = LaurentSeries({e: c for e, c in out.coeffs.items() if e < trunc}, trunc)
    _NESTED_CACHE[key] = out
    return out


__all__ = [
    "ExpPoly",
    "exppoly_mul",
    "qsum_strict",
    "full_sum",
    "nested_regularized_sum",
    "kernel_series",
    "power_sum_series",
    "DivergentSumError",
    "DEGREE_LIMIT",
    "DEPTH_LIMIT",
]
