"""Exact arithmetic in Q(delta): rational functions in one perturbation variable.

Numerators are integer-scaled polynomials; denominators are kept factored as
products of monic linear terms (delta - root)^m. Every denominator the
renormalization pipeline produces is a product of direction rates, which are
linear in delta, so this factored form is closed under the arithmetic we need
and keeps normalization (coprime, monic denominator) cheap: cancellation is a
rational-root check instead of a general gcd.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd


# -- integer-scaled polynomials -------------------------------------------
#
# poly = (den, coeffs): den positive int, coeffs ascending-degree ints with no
# trailing zero, gcd(den, *coeffs) = 1. The zero polynomial is (1, ()).

PZERO = (1, ())
PONE = (1, (1,))


def pnormal(den, coeffs):
    n = len(coeffs)
    while n and coeffs[n - 1] == 0:
        n -= 1
    if n == 0:
        return PZERO
    coeffs = coeffs[:n]
    g = den
    for c in coeffs:
        g = gcd(g, c)
        if g == 1:
            break
    if den < 0:
        g = -g
    if g != 1:
        den //= g
        coeffs = [c // g for c in coeffs]
    return (den, tuple(coeffs))


def pfrom_fraction(q: Fraction):
    if not q:
        return PZERO
    return (q.denominator, (q.numerator,))


def pfrom_fractions(vals):
    """Polynomial with the given Fraction coefficients, ascending degree."""
    vals = [Fraction(v) for v in vals]
    den = 1
    for v in vals:
        den = den * v.denominator // gcd(den, v.denominator)
    return pnormal(den, [int(v * den) for v in vals])


def padd(p, q):
    dp, cp = p
    dq, cq = q
    if not cp:
        return q
    if not cq:
        return p
    g = gcd(dp, dq)
    den = dp // g * dq
    mp = dq // g
    mq = dp // g
    n = max(len(cp), len(cq))
    out = [0] * n
    for i, c in enumerate(cp):
        out[i] = c * mp
    for i, c in enumerate(cq):
        out[i] += c * mq
    return pnormal(den, out)


def pneg(p):
    den, coeffs = p
    return (den, tuple(-c for c in coeffs))


def pmul(p, q):
    dp, cp = p
    dq, cq = q
    if not cp or not cq:
        return PZERO
    if len(cp) == 1 and len(cq) == 1:
        return pnormal(dp * dq, [cp[0] * cq[0]])
    out = [0] * (len(cp) + len(cq) - 1)
    for i, a in enumerate(cp):
        if a:
            for j, b in enumerate(cq):
                out[i + j] += a * b
    return pnormal(dp * dq, out)


def pscale(p, q: Fraction):
    if not q:
        return PZERO
    den, coeffs = p
    return pnormal(den * q.denominator, [c * q.numerator for c in coeffs])


def peval(p, x: Fraction) -> Fraction:
    den, coeffs = p
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc / den


def pdeg(p) -> int:
    return len(p[1]) - 1


def pdiv_linear(p, root: Fraction):
    """Exact division of p by (delta - root); p(root) must be 0."""
    den, coeffs = p
    fr = [Fraction(c, den) for c in coeffs]
    n = len(fr)
    out = [Fraction(0)] * (n - 1)
    carry = Fraction(0)
    for i in range(n - 1, 0, -1):
        carry = fr[i] + carry * root
        out[i - 1] = carry
    if fr[0] + carry * root:
        raise ArithmeticError("polynomial not divisible by the given linear factor")
    return pfrom_fractions(out)


def pstr(p, var="delta"):
    den, coeffs = p
    if not coeffs:
        return "0"
    parts = []
    for i, c in enumerate(coeffs):
        if not c:
            continue
        q = Fraction(c, den)
        if i == 0:
            parts.append(str(q))
        elif i == 1:
            parts.append(f"{q}*{var}")
        else:
            parts.append(f"{q}*{var}^{i}")
    return " + ".join(parts).replace("+ -", "- ")


_EXPAND_CACHE: dict = {}


def expand_factors(factors):
    """Expanded polynomial of prod (delta - root)^mult for the factor tuple."""
    if not factors:
        return PONE
    p = _EXPAND_CACHE.get(factors)
    if p is not None:
        return p
    root, mult = factors[0]
    rest = factors[1:] if mult == 1 else ((root, mult - 1),) + factors[1:]
    p = pmul(pfrom_fractions([-root, 1]), expand_factors(rest))
    _EXPAND_CACHE[factors] = p
    return p


class PoleAtZeroError(ArithmeticError):
    """Raised when lim_{delta->0} is requested of a function with a pole at 0."""

    def __init__(self, order):
        super().__init__(f"pole of order {order} at delta = 0")
        self.order = order


def _rational_roots(p):
    """All rational roots of p with multiplicity, plus the root-free cofactor."""
    roots = []
    den, coeffs = p
    # candidates p/q with p | trailing nonzero coeff, q | leading coeff
    while len(coeffs) > 1:
        lead = coeffs[-1]
        k = 0
        while coeffs[k] == 0:
            k += 1
        if k:
            roots.extend([Fraction(0)] * k)
            coeffs = coeffs[k:]
            if len(coeffs) == 1:
                break
        low = coeffs[0]
        found = None
        for pn in _divisors(abs(low)):
            for qn in _divisors(abs(lead)):
                for cand in (Fraction(pn, qn), Fraction(-pn, qn)):
                    if peval((den, coeffs), cand) == 0:
                        found = cand
                        break
                if found is not None:
                    break
            if found is not None:
                break
        if found is None:
            break
        roots.append(found)
        den, coeffs = pdiv_linear((den, coeffs), found)
    return roots, (den, coeffs)


def _divisors(n):
    if n == 0:
        return [1]
    out = []
    i = 1
    while i * i <= n:
        if n % i == 0:
            out.append(i)
            if i != n // i:
                out.append(n // i)
        i += 1
    out.sort()
    return out


class RatFunc:
    """Element of Q(delta), reduced, with factored monic-linear denominator."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num=PZERO, den=()):
        self.num = num
        self.den = den
        self._hash = None

    @staticmethod
    def _make(num, den):
        if not num[1]:
            return _RF_ZERO
        if den:
            out = []
            for root, mult in den:
                while mult > 0 and peval(num, root) == 0:
                    num = pdiv_linear(num, root)
                    mult -= 1
                if mult:
                    out.append((root, mult))
            den = tuple(sorted(out))
        return RatFunc(num, den)

    # -- constructors ------------------------------------------------------
    @staticmethod
    def from_rational(q) -> "RatFunc":
        return RatFunc._make(pfrom_fraction(Fraction(q)), ())

    @staticmethod
    def poly(coeffs) -> "RatFunc":
        """Polynomial in delta with the given coefficients, ascending degree."""
        return RatFunc._make(pfrom_fractions(coeffs), ())

    @staticmethod
    def delta() -> "RatFunc":
        return RatFunc.poly([0, 1])

    # -- predicates ----------------------------------------------------
    def __bool__(self):
        return bool(self.num[1])

    def is_rational(self):
        return not self.den and pdeg(self.num) <= 0

    def as_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not a constant")
        return peval(self.num, Fraction(0))

    # -- arithmetic ------------------------------------------------------
    @staticmethod
    def _coerce(x):
        if isinstance(x, RatFunc):
            return x
        if isinstance(x, (int, Fraction)):
            return RatFunc.from_rational(x)
        return NotImplemented

    def __add__(self, other):
        other = RatFunc._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RatFunc.accumulate([self, other])

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(pneg(self.num), self.den)

    def __sub__(self, other):
        other = RatFunc._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RatFunc.accumulate([self, -other])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = RatFunc._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        num, den = _raw_mul((self.num, self.den), (other.num, other.den))
        return RatFunc._make(num, _den_tuple(den))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = _RF_ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            k >>= 1
            if k:
                base = base * base
        return out

    def __truediv__(self, other):
        other = RatFunc._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return RatFunc._coerce(other) * self.inverse()

    def inverse(self) -> "RatFunc":
        if not self:
            raise ZeroDivisionError("division by the zero rational function")
        roots, cofactor = _rational_roots(self.num)
        if pdeg(cofactor) > 0:
            raise NotImplementedError(
                "division by a rational function whose numerator has an "
                "irrational factor is not supported"
            )
        scale = peval(cofactor, Fraction(0))  # constant cofactor
        den_poly = expand_factors(self.den)
        num = pscale(den_poly, 1 / scale)
        newden = {}
        for r in roots:
            newden[r] = newden.get(r, 0) + 1
        return RatFunc._make(num, _den_tuple(newden))

    # -- batched accumulation (used by Laurent convolution) ---------------
    @staticmethod
    def accumulate(items) -> "RatFunc":
        """Exact sum of RatFuncs with a single common denominator."""
        raws = []
        for it in items:
            if isinstance(it, (int, Fraction)):
                raws.append((pfrom_fraction(Fraction(it)), {}))
            else:
                raws.append((it.num, dict(it.den)))
        return _sum_raw(raws)

    @staticmethod
    def dot(pairs) -> "RatFunc":
        """Exact sum of products c1*c2 with a single common denominator."""
        raws = []
        for c1, c2 in pairs:
            r1 = (pfrom_fraction(Fraction(c1)), {}) if isinstance(c1, (int, Fraction)) else (c1.num, dict(c1.den))
            r2 = (pfrom_fraction(Fraction(c2)), {}) if isinstance(c2, (int, Fraction)) else (c2.num, dict(c2.den))
            raws.append(_raw_mul(r1, r2))
        return _sum_raw(raws)

    # -- evaluation ------------------------------------------------------
    def limit0(self) -> Fraction:
        """Value at delta = 0; raises PoleAtZeroError on a genuine pole."""
        for root, mult in self.den:
            if root == 0:
                raise PoleAtZeroError(mult)
        val = peval(self.num, Fraction(0))
        for root, mult in self.den:
            val /= (-root) ** mult
        return val

    def eval_at(self, x: Fraction) -> Fraction:
        x = Fraction(x)
        val = peval(self.num, x)
        for root, mult in self.den:
            if x == root:
                raise ZeroDivisionError(f"pole at delta = {x}")
            val /= (x - root) ** mult
        return val

    # -- comparison, hashing, display -------------------------------------
    def __eq__(self, other):
        other = RatFunc._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def __repr__(self):
        return f"RatFunc({self})"

    def __str__(self):
        ns = pstr(self.num)
        if not self.den:
            return ns
        if pdeg(self.num) > 0 or " " in ns:
            ns = f"({ns})"
        fs = []
        for root, mult in self.den:
            base = pstr(pfrom_fractions([-root, 1]))
            fs.append(f"({base})" + (f"^{mult}" if mult > 1 else ""))
        return ns + "/" + "*".join(fs)


def _raw_mul(r1, r2):
    n1, d1 = r1
    n2, d2 = r2
    den = dict(d1) if isinstance(d1, dict) else dict(d1)
    for root, mult in (d2.items() if isinstance(d2, dict) else d2):
        den[root] = den.get(root, 0) + mult
    return pmul(n1, n2), den


def _den_tuple(den):
    if isinstance(den, dict):
        return tuple(sorted((r, m) for r, m in den.items() if m))
    return tuple(sorted(den))


def _sum_raw(raws):
    common: dict = {}
    for _, den in raws:
        for root, mult in den.items():
            if mult > common.get(root, 0):
                common[root] = mult
    total = PZERO
    for num, den in raws:
        extra = tuple(
            sorted((r, m - den.get(r, 0)) for r, m in common.items() if m - den.get(r, 0))
        )
        if extra:
            num = pmul(num, expand_factors(extra))
        total = padd(total, num)
    return RatFunc._make(total, _den_tuple(common))


_RF_ZERO = RatFunc(PZERO, ())
_RF_ONE = RatFunc(PONE, ())


def ratfunc_limit0(f) -> Fraction:
    """lim_{delta->0} f for f in Q(delta) (or a plain rational)."""
    if isinstance(f, (int, Fraction)):
        return Fraction(f)
    return f.limit0()


__all__ = [
    "RatFunc",
    "PoleAtZeroError",
    "ratfunc_limit0",
]
