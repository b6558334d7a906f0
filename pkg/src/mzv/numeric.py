"""High-precision evaluation of convergent MZVs, star MZVs, and q-MZVs with
explicit error bounds.

MZVs are computed from their iterated-integral representation split at the
midpoint: writing the argument list as a binary word w = a_1...a_n,

    zeta(w) = sum_{j=0}^{n} G(rho(a_1..a_j)) * G(a_{j+1}..a_n),

where rho reverses the word and swaps the two letter kinds and G is the
generalized polylogarithm series at 1/2. Every G-series has positive
rational terms decaying like 2^{-n}, uniformly in the depth, so partial sums
are exact rationals and the tail has the closed rational majorant

    sum_{n>M} 2^{-n} C(n-1, j-1) <= 2^{1-M} C(M, j-1)   for M >= 3j

(ratio of consecutive majorant terms is (1/2) n/(n-j+1) <= 3/4 there). The
reported error_bound combines these tails through the product rule; it is an
engineering construction, honest but not sharp.

q-MZVs are geometric series with exact rational terms; each term factor is
computed exactly and partial sums accumulate in fixed-point dyadic integers
whose floor-rounding error is tracked and added to the bound (raw rational
accumulation would grind against the pairwise-coprime denominators e^n - c^n).
The tail uses the same counting majorant with ratio q * n/(n-k+1).
"""
from __future__ import annotations

from dataclasses import dataclass
from decimal import Decimal, getcontext
from fractions import Fraction
from math import comb

TAIL_MODEL = "midpoint split-convolution with counting majorant tails"
DEFAULT_TARGET = Fraction(1, 10**10)
N_MAX = 1 << 14


class PrecisionUnreachableError(ArithmeticError):
    def __init__(self, achieved):
        super().__init__(f"target error unreachable; achieved bound {achieved}")
        self.achieved = achieved


@dataclass(frozen=True)
class NumericValue:
    value: Fraction
    error_bound: Fraction
    terms_used: int
    note: str = TAIL_MODEL

    def to_float(self) -> float:
        return float(self.value)

    def decimal_str(self, digits: int = 20) -> str:
        getcontext().prec = digits + 5
        d = Decimal(self.value.numerator) / Decimal(self.value.denominator)
        return str(+d.quantize(Decimal(1).scaleb(-digits)))

    def agrees_with(self, other: "NumericValue", slack=Fraction(0)) -> bool:
        return abs(self.value - other.value) <= self.error_bound + other.error_bound + slack


def _check_admissible(s):
    s = tuple(int(x) for x in s)
    if not s or s[0] < 2 or any(x < 1 for x in s):
        raise ValueError(f"not an admissible argument list: {s}")
    return s


def _bits_of(s):
    bits = []
    for x in s:
        bits.extend([0] * (x - 1))
        bits.append(1)
    return tuple(bits)


def _rho(bits):
    return tuple(1 - b for b in reversed(bits))


def _composition_of_bits(bits):
    comp = []
    run = 0
    for b in bits:
        if b == 0:
            run += 1
        else:
            comp.append(run + 1)
            run = 0
    assert run == 0
    return tuple(comp)


_G_CACHE: dict = {}


def _polylog_half(comp, cutoff):
    """(partial sum, tail bound) of sum_{n1>..>nj>=1, n1<=cutoff} 2^{-n1}/prod ni^ti."""
    key = (comp, cutoff)
    got = _G_CACHE.get(key)
    if got is not None:
        return got
    j = len(comp)
    if j == 0:
        return Fraction(1), Fraction(0)
    # prefix[m] = sum over chains with top index <= m of the inner levels
    prefix = [Fraction(1)] * (cutoff + 1)
    for t in reversed(comp[1:]):
        vals = [Fraction(0)] * (cutoff + 1)
        for n in range(1, cutoff + 1):
            vals[n] = Fraction(1, n**t) * prefix[n - 1]
        run = Fraction(0)
        for n in range(cutoff + 1):
            run += vals[n]
            prefix[n] = run
    total = Fraction(0)
    pw = Fraction(1)
    half = Fraction(1, 2)
    t1 = comp[0]
    for n in range(1, cutoff + 1):
        pw *= half
        total += pw * Fraction(1, n**t1) * prefix[n - 1]
    tail = Fraction(2) ** (1 - cutoff) * comb(cutoff, j - 1)
    got = (total, tail)
    _G_CACHE[key] = got
    return got


def mzv_eval(s, target_error=DEFAULT_TARGET, n_max: int = N_MAX) -> NumericValue:
    """Multiple zeta value at an admissible argument list."""
    s = _check_admissible(s)
    target_error = Fraction(target_error)
    bits = _bits_of(s)
    n = len(bits)
    pieces = []
    for j in range(n + 1):
        pieces.append(
            (_composition_of_bits(_rho(bits[:j])), _composition_of_bits(bits[j:]))
        )
    max_depth = max(max(len(l), len(r)) for l, r in pieces)
    cutoff = max(48, 4 * max_depth)
    while True:
        total = Fraction(0)
        bound = Fraction(0)
        for left, right in pieces:
            gl, bl = _polylog_half(left, cutoff)
            gr, br = _polylog_half(right, cutoff)
            total += gl * gr
            bound += gl * br + bl * gr + bl * br
        if bound <= target_error:
            return NumericValue(total, bound, cutoff)
        if cutoff >= n_max:
            raise PrecisionUnreachableError(bound)
        cutoff = min(2 * cutoff, n_max)


def _coarsenings(s):
    """All ways of merging adjacent arguments (the star/strict dictionary)."""
    k = len(s)
    for mask in range(1 << (k - 1)) if k else [0]:
        merged = [s[0]]
        for i in range(1, k):
            if mask >> (i - 1) & 1:
                merged[-1] += s[i]
            else:
                merged.append(s[i])
        yield tuple(merged)


def mzv_star_eval(s, target_error=DEFAULT_TARGET, n_max: int = N_MAX) -> NumericValue:
    """Non-strict MZV by inclusion of equalities: sum over coarsenings."""
    s = _check_admissible(s)
    target_error = Fraction(target_error)
    parts = list(_coarsenings(s))
    per = target_error / len(parts)
    total = Fraction(0)
    bound = Fraction(0)
    terms = 0
    for comp in parts:
        nv = mzv_eval(comp, per, n_max)
        total += nv.value
        bound += nv.error_bound
        terms = max(terms, nv.terms_used)
    return NumericValue(total, bound, terms)


def _q_int(n: int, q: Fraction) -> Fraction:
    return (1 - q**n) / (1 - q)


def _q_tail_bound(cutoff, k, q, star):
    # majorant q^n * (number of tuples with top index n); the count ratio is
    # (n+k-1)/n for the non-strict case and n/(n-k+1) for the strict one,
    # both decreasing in n, so the tail is geometric from n0 on.
    n0 = cutoff + 1
    if star:
        a = q**n0 * comb(n0 + k - 2, k - 1)
        ratio = q * Fraction(n0 + k - 1, n0)
    else:
        if n0 <= k - 1:
            return None
        a = q**n0 * comb(n0 - 1, k - 1)
        ratio = q * Fraction(n0, n0 - k + 1)
    if ratio >= 1:
        return None
    return a / (1 - ratio)


def _qmzv_core(s, q, target_error, n_max, star):
    s = _check_admissible(s)
    q = Fraction(q)
    if not 0 < q < 1:
        raise ValueError("q must lie in (0, 1)")
    target_error = Fraction(target_error)
    k = len(s)
    cutoff = max(16, 3 * k)
    while True:
        bound = _q_tail_bound(cutoff, k, q, star)
        if bound is not None and bound <= target_error / 2:
            break
        if cutoff >= n_max:
            raise PrecisionUnreachableError(bound if bound is not None else Fraction(1))
        cutoff = min(max(cutoff + 8, cutoff * 5 // 4), n_max)

    # Partial sums accumulate in fixed-point integers scaled by 2^p: the
    # per-slot factors q^{n(t-1)}/[n]^t are exact rationals <= 1, each
    # multiply-round step floors once, and sums are plain integer adds.
    # The rounding error propagates through factors <= 1, so it obeys
    # E_vals = E_prev + ulp, E_prefix = cutoff * E_vals per level; the total
    # is added to the reported bound.
    p = max(60, (10 * len(str(target_error.denominator))) // 3 + 60)
    scale = 1 << p
    ulp = Fraction(1, scale)

    qi = [None] + [_q_int(n, q) for n in range(1, cutoff + 1)]

    def factor(n, t):
        return q ** (n * (t - 1)) / qi[n] ** t

    prefix = [scale] * (cutoff + 1)  # exact representation of 1
    err_prefix = Fraction(0)
    for t in reversed(s[1:]):
        vals = [0] * (cutoff + 1)
        for n in range(1, cutoff + 1):
            f = factor(n, t)
            base = prefix[n - 1 if not star else n]
            vals[n] = (base * f.numerator) // f.denominator
        run = 0
        for n in range(cutoff + 1):
            run += vals[n]
            prefix[n] = run
        err_prefix = cutoff * (err_prefix + ulp)
    t1 = s[0]
    total = 0
    for n in range(1, cutoff + 1):
        f = factor(n, t1)
        base = prefix[n - 1 if not star else n]
        total += (base * f.numerator) // f.denominator
    err_total = cutoff * (err_prefix + ulp)
    return NumericValue(Fraction(total, scale), bound + err_total, cutoff)


def qmzv_eval(s, q, target_error=DEFAULT_TARGET, n_max: int = N_MAX) -> NumericValue:
    """q-deformed MZV with q-integers [n] = (1-q^n)/(1-q); exact partial sums."""
    return _qmzv_core(s, q, target_error, n_max, star=False)


def qmzv_star_eval(s, q, target_error=DEFAULT_TARGET, n_max: int = N_MAX) -> NumericValue:
    """Non-strict q-MZV (n_1 >= ... >= n_k >= 1)."""
    return _qmzv_core(s, q, target_error, n_max, star=True)


__all__ = [
    "NumericValue",
    "PrecisionUnreachableError",
    "mzv_eval",
    "mzv_star_eval",
    "qmzv_eval",
    "qmzv_star_eval",
    "TAIL_MODEL",
    "DEFAULT_TARGET",
    "N_MAX",
]
