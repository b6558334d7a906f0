"""Truncated formal Laurent series in one variable eps over Q or Q(delta).

A series stores only finitely many coefficients; `trunc` is the first unknown
exponent (None = exact: every unstored coefficient is a true zero). Any
operation that would need an unknown coefficient fails loudly rather than
returning garbage.
"""
from __future__ import annotations

import json
from fractions import Fraction
from math import factorial

from .ratfunc import RatFunc


class PrecisionError(ArithmeticError):
    """A required coefficient lies beyond the truncation order."""


class NonInvertibleError(ArithmeticError):
    """Inversion of a series that is zero up to its truncation order."""


def _is_rf(c):
    return isinstance(c, RatFunc)


def _dot(pairs):
    """Exact sum of coefficient products."""
    if any(_is_rf(a) or _is_rf(b) for a, b in pairs):
        return RatFunc.dot(pairs)
    acc = Fraction(0)
    for a, b in pairs:
        acc += a * b
    return acc


def _accumulate(items):
    if any(_is_rf(x) for x in items):
        return RatFunc.accumulate(items)
    return sum(items, Fraction(0))


class LaurentSeries:
    __slots__ = ("coeffs", "trunc")

    def __init__(self, coeffs=None, trunc=None):
        cleaned = {}
        if coeffs:
            for e, c in (coeffs.items() if isinstance(coeffs, dict) else coeffs):
                if not isinstance(c, RatFunc):
                    c = Fraction(c)
                if c and (trunc is None or e < trunc):
                    cleaned[e] = cleaned[e] + c if e in cleaned else c
        self.coeffs = {e: c for e, c in cleaned.items() if c}
        self.trunc = trunc

    # -- constructors ------------------------------------------------------
    @staticmethod
    def zero(trunc=None):
        return LaurentSeries({}, trunc)

    @staticmethod
    def one(trunc=None):
        return LaurentSeries({0: Fraction(1)}, trunc)

    @staticmethod
    def monomial(exponent, coeff=1, trunc=None):
        return LaurentSeries({exponent: coeff}, trunc)

    @staticmethod
    def from_scalar(c, trunc=None):
        return LaurentSeries({0: c}, trunc)

    # -- structure ---------------------------------------------------------
    def is_zero(self):
        return not self.coeffs

    def valuation(self):
        """Least stored exponent; None for a (possibly truncated) zero."""
        return min(self.coeffs) if self.coeffs else None

    def _val_bound(self):
        # first exponent at which the series may be nonzero
        if self.coeffs:
            return min(self.coeffs)
        return self.trunc  # None means provably zero everywhere

    def coeff(self, e):
        if self.trunc is not None and e >= self.trunc:
            raise PrecisionError(f"coefficient of eps^{e} beyond truncation {self.trunc}")
        return self.coeffs.get(e, Fraction(0))

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        return self.coeffs == other.coeffs and self.trunc == other.trunc

    def __hash__(self):
        return hash((frozenset(self.coeffs.items()), self.trunc))

    # -- ring operations -----------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        t = _min_trunc(self.trunc, other.trunc)
        out = {}
        for e in set(self.coeffs) | set(other.coeffs):
            if t is not None and e >= t:
                continue
            a = self.coeffs.get(e)
            b = other.coeffs.get(e)
            c = b if a is None else (a if b is None else a + b)
            if c:
                out[e] = c
        return _raw(out, t)

    def __neg__(self):
        return _raw({e: -c for e, c in self.coeffs.items()}, self.trunc)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        t = _mul_trunc(self, other)
        by_exp = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = e1 + e2
                if t is not None and e >= t:
                    continue
                by_exp.setdefault(e, []).append((c1, c2))
        out = {}
        for e, pairs in by_exp.items():
            c = _dot(pairs)
            if c:
                out[e] = c
        return _raw(out, t)

    def scale(self, scalar):
        if not isinstance(scalar, RatFunc):
            scalar = Fraction(scalar)
        if not scalar:
            return LaurentSeries.zero(self.trunc)
        return _raw({e: scalar * c for e, c in self.coeffs.items()}, self.trunc)

    def shift(self, k):
        """Multiply by eps^k."""
        t = None if self.trunc is None else self.trunc + k
        return _raw({e + k: c for e, c in self.coeffs.items()}, t)

    def inv_unit(self, trunc=None):
        """Multiplicative inverse of a series with invertible valuation term.

        For an exact input a target truncation must be supplied; for a
        truncated input the result is determined to order trunc - 2*val.
        """
        v = self.valuation()
        if v is None:
            raise NonInvertibleError("series is zero up to its truncation order")
        if self.trunc is None:
            if trunc is None:
                raise ValueError("inverse of an exact series needs an explicit truncation")
            n_terms = trunc + v
        else:
            n_terms = self.trunc - v
            if trunc is not None:
                n_terms = min(n_terms, trunc + v)
        if n_terms <= 0:
            raise PrecisionError("insufficient truncation to invert")
        lead = self.coeffs[v]
        if _is_rf(lead):
            inv_lead = lead.inverse()
        else:
            inv_lead = 1 / lead
        # unit part u(eps) = a / (lead * eps^v); invert by recursion
        u = {e - v: c for e, c in self.coeffs.items()}
        b = {0: inv_lead if _is_rf(inv_lead) else Fraction(inv_lead)}
        for k in range(1, n_terms):
            pairs = [(u[j], b[k - j]) for j in range(1, k + 1) if j in u and (k - j) in b]
            if pairs:
                c = _dot(pairs)
                if c:
                    c = -(inv_lead * c)
                    if c:
                        b[k] = c
        return _raw({e - v: c for e, c in b.items()}, n_terms - v)

    # -- Rota-Baxter / differential structure ------------------------------
    def pi_minus(self):
        """Minimal-subtraction projector: keep strictly negative exponents."""
        t = self.trunc
        out_t = None if (t is None or t >= 0) else t
        return _raw({e: c for e, c in self.coeffs.items() if e < 0}, out_t)

    def pi_plus(self):
        """Complement id - pi_minus: exponents >= 0, truncation unchanged."""
        return _raw({e: c for e, c in self.coeffs.items() if e >= 0}, self.trunc)

    def finite_part(self):
        """Coefficient of eps^0 (zero if absent); needs truncation >= 1."""
        if self.trunc is not None and self.trunc <= 0:
            raise PrecisionError("finite part undetermined: truncation <= 0")
        return self.coeffs.get(0, Fraction(0))

    def d_epsilon(self):
        """Termwise derivative d/d eps."""
        t = None if self.trunc is None else self.trunc - 1
        out = {}
        for e, c in self.coeffs.items():
            if e != 0 and (t is None or e - 1 < t):
                out[e - 1] = e * c
        return _raw(out, t)

    # -- serialization -------------------------------------------------------
    def to_json(self):
        terms = []
        for e in sorted(self.coeffs):
            c = self.coeffs[e]
            if _is_rf(c):
                raise TypeError("JSON serialization is defined for rational coefficients")
            terms.append([e, str(c)])
        return {"terms": terms, "trunc": self.trunc}

    @staticmethod
    def from_json(obj):
        if isinstance(obj, str):
            obj = json.loads(obj)
        return LaurentSeries(
            {int(e): Fraction(c) for e, c in obj["terms"]}, obj.get("trunc")
        )

    def __repr__(self):
        return f"LaurentSeries({self})"

    def __str__(self):
        if not self.coeffs:
            body = "0"
        else:
            parts = []
            for e in sorted(self.coeffs):
                c = self.coeffs[e]
                cs = f"({c})" if _is_rf(c) else str(c)
                if e == 0:
                    parts.append(cs)
                elif e == 1:
                    parts.append(f"{cs}*eps")
                else:
                    parts.append(f"{cs}*eps^{e}")
            body = " + ".join(parts)
        if self.trunc is not None:
            body += f" + O(eps^{self.trunc})"
        return body


def _raw(coeffs, trunc):
    s = LaurentSeries.__new__(LaurentSeries)
    s.coeffs = coeffs
    s.trunc = trunc
    return s


def _min_trunc(a, b):
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


def _mul_trunc(a, b):
    cands = []
    if a.trunc is not None:
        vb = b._val_bound()
        if vb is not None:
            cands.append(a.trunc + vb)
    if b.trunc is not None:
        va = a._val_bound()
        if va is not None:
            cands.append(b.trunc + va)
    return min(cands) if cands else None


def exp_linear(c, trunc):
    """exp(c*eps) = sum_{k<trunc} c^k eps^k / k!."""
    if trunc < 1:
        raise ValueError("truncation must be >= 1")
    out = {0: Fraction(1)}
    if not isinstance(c, RatFunc):
        c = Fraction(c)
    if c:
        power = c if _is_rf(c) else Fraction(c)
        ck = None
        for k in range(1, trunc):
            ck = power if k == 1 else ck * power
            out[k] = ck * Fraction(1, factorial(k))
    return LaurentSeries(out, trunc)


def agree(a: LaurentSeries, b: LaurentSeries) -> bool:
    """Equality of all coefficients below the common truncation order."""
    t = _min_trunc(a.trunc, b.trunc)
    exps = set(a.coeffs) | set(b.coeffs)
    for e in exps:
        if t is not None and e >= t:
            continue
        ca = a.coeffs.get(e, Fraction(0))
        cb = b.coeffs.get(e, Fraction(0))
        if _is_rf(ca) or _is_rf(cb):
            if (RatFunc._coerce(ca) - RatFunc._coerce(cb)):
                return False
        elif ca != cb:
            return False
    return True


def laurent_add(a, b):
    return a + b


def laurent_mul(a, b):
    return a * b


def laurent_inv_unit(a, trunc=None):
    return a.inv_unit(trunc)


def pi_minus(a):
    return a.pi_minus()


def finite_part(a):
    return a.finite_part()


def d_epsilon(a):
    return a.d_epsilon()


__all__ = [
    "LaurentSeries",
    "PrecisionError",
    "NonInvertibleError",
    "exp_linear",
    "agree",
    "laurent_add",
    "laurent_mul",
    "laurent_inv_unit",
    "pi_minus",
    "finite_part",
    "d_epsilon",
]
