"""Characters from the word Hopf algebra into a Laurent algebra, convolution,
and the algebraic Birkhoff decomposition by recursion over word length.

The coproduct is deconcatenation, which is length-graded; the recursion for
the counterterm therefore terminates, and the decomposition is computed
without ever forming a convolution inverse.
"""
from __future__ import annotations

from fractions import Fraction

from .laurent import LaurentSeries, PrecisionError, agree
from .words import EMPTY, Word, WordSum, mixable_shuffle, word_d


class Character:
    """Word -> LaurentSeries evaluation with a memo, linear on WordSums.

    `lam` is the mixable-shuffle weight the character is multiplicative
    against (a property to check, not an enforced constraint).
    """

    def __init__(self, eval_word, lam=Fraction(1), name=""):
        self._eval = eval_word
        self.lam = lam
        self.name = name
        self.memo = {}

    def __call__(self, x):
        if isinstance(x, Word):
            return self._word(x)
        acc = LaurentSeries.zero()
        for w, c in x.items():
            acc = acc + self._word(w).scale(c)
        return acc

    def _word(self, w: Word) -> LaurentSeries:
        if not w:
            return LaurentSeries.one()
        got = self.memo.get(w)
        if got is None:
            got = self.memo[w] = self._eval(w)
        return got


def unit_character(lam=Fraction(1)) -> Character:
    """e = unit . counit: 1 on the empty word, 0 elsewhere."""
    return Character(lambda w: LaurentSeries.zero(), lam=lam, name="e")


def convolve(f, g, w: Word) -> LaurentSeries:
    """(f * g)(w) = sum over deconcatenations f(w_(1)) g(w_(2))."""
    acc = LaurentSeries.zero()
    for j in range(len(w) + 1):
        acc = acc + f(w[:j]) * g(w[j:])
    return acc


class BirkhoffPair:
    """Counterterm phi_- and renormalized part phi_+ of a character.

    phi_-(w) = -Pi(bar(w)) and phi_+(w) = (id - Pi)(bar(w)) with
    bar(w) = phi(w) + sum over proper splits phi_-(w') phi(w'').
    """

    def __init__(self, phi: Character):
        self.phi = phi
        self._bar = {}
        self._minus = {EMPTY: LaurentSeries.one()}
        self._plus = {EMPTY: LaurentSeries.one()}

    def bar(self, w: Word) -> LaurentSeries:
        got = self._bar.get(w)
        if got is None:
            acc = self.phi(w)
            for j in range(1, len(w)):
                acc = acc + self.minus(w[:j]) * self.phi(w[j:])
            got = self._bar[w] = acc
        return got

    def minus(self, w: Word) -> LaurentSeries:
        got = self._minus.get(w)
        if got is None:
            b = self.bar(w)
            if b.trunc is not None and b.trunc < 0:
                raise PrecisionError(
                    f"pole part of the prepared value undetermined for word {w}"
                )
            got = self._minus[w] = -b.pi_minus()
        return got

    def plus(self, w: Word) -> LaurentSeries:
        got = self._plus.get(w)
        if got is None:
            b = self.bar(w)
            if b.trunc is not None and b.trunc <= 0:
                raise PrecisionError(
                    f"eps^0 coefficient undetermined for word {w}; increase truncation"
                )
            got = self._plus[w] = b.pi_plus()
        return got

    def minus_sum(self, x: WordSum) -> LaurentSeries:
        acc = LaurentSeries.zero()
        for w, c in x.items():
            acc = acc + self.minus(w).scale(c)
        return acc

    def plus_sum(self, x: WordSum) -> LaurentSeries:
        acc = LaurentSeries.zero()
        for w, c in x.items():
            acc = acc + self.plus(w).scale(c)
        return acc


def birkhoff(phi: Character) -> BirkhoffPair:
    return BirkhoffPair(phi)


def check_multiplicativity(pair: BirkhoffPair, u: Word, v: Word) -> bool:
    """phi_pm(u <> v) = phi_pm(u) phi_pm(v), exactly at common truncation."""
    uv = mixable_shuffle(WordSum.single(u), WordSum.single(v), pair.phi.lam)
    ok_minus = agree(pair.minus_sum(uv), pair.minus(u) * pair.minus(v))
    ok_plus = agree(pair.plus_sum(uv), pair.plus(u) * pair.plus(v))
    return ok_minus and ok_plus


class DifferentialPreconditionError(AssertionError):
    """The character itself fails phi . d = d/deps . phi."""


def check_differential(phi: Character, pair: BirkhoffPair, w: Word) -> bool:
    """phi_+(d w) = d/deps phi_+(w), after checking the same for phi."""
    dw = word_d(w)
    if not agree(phi(dw), phi(w).d_epsilon()):
        raise DifferentialPreconditionError(
            f"character is not a differential homomorphism on {w}"
        )
    return agree(pair.plus_sum(dw), pair.plus(w).d_epsilon())


__all__ = [
    "Character",
    "BirkhoffPair",
    "birkhoff",
    "convolve",
    "unit_character",
    "check_multiplicativity",
    "check_differential",
    "DifferentialPreconditionError",
]
