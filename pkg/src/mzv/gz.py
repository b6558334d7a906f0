"""Heat-kernel renormalization of multiple zeta values at non-positive integers.

The regularized character sends a weighted-pair word to its nested sum
expansion in eps; Birkhoff decomposition against the minimal-subtraction
projector removes the pole part, and the renormalized value is the eps^0
coefficient of the plus part. Plain (direction-free) values are taken with
symbolic directions |s_i| + delta followed by the exact limit delta -> 0.
"""
from __future__ import annotations

from fractions import Fraction

from .hopf import BirkhoffPair, Character, birkhoff
from .laurent import LaurentSeries, PrecisionError
from .ratfunc import RatFunc, ratfunc_limit0
from .sumengine import nested_regularized_sum
from .words import DomainError, Word

DELTA_SYMBOLIC = "delta"
EXACT = "exact"


def default_trunc(weight: int, depth: int, headroom: int = 8) -> int:
    """Working truncation: pole orders reach weight + depth, and each
    convolution in the decomposition consumes headroom."""
    return 2 * (weight + depth) + headroom


def gz_character(word: Word, trunc: int | None = None) -> LaurentSeries:
    """Regularized nested-sum value of one word (multiplicative against the
    quasi-shuffle product as a checkable property)."""
    if trunc is None:
        trunc = default_trunc(word.weight(), len(word))
    return nested_regularized_sum(word, trunc)


def make_gz_character(trunc: int) -> Character:
    return Character(lambda w: nested_regularized_sum(w, trunc), lam=Fraction(1), name="Z")


def gz_birkhoff(word: Word, trunc: int | None = None) -> BirkhoffPair:
    if trunc is None:
        trunc = default_trunc(word.weight(), len(word))
    return birkhoff(make_gz_character(trunc))


def gz_renorm_directional(s, r, trunc: int | None = None):
    """Renormalized directional value: eps^0 of the plus part.

    Returns a Fraction for rational directions, an element of Q(delta) for
    symbolic ones.
    """
    word = Word.from_sr(zip(s, r))
    pair = gz_birkhoff(word, trunc)
    return pair.plus(word).finite_part()


def _delta_directions(s):
    return [RatFunc.poly([abs(si), 1]) for si in s]


def gz_renorm(s, trunc: int | None = None, mode: str = DELTA_SYMBOLIC) -> Fraction:
    """Renormalized value at non-positive integer arguments.

    delta mode evaluates at directions |s_i| + delta and takes the exact
    limit delta -> 0 (always defined); exact mode evaluates at r = -s and
    needs strictly negative arguments. The two agree there.
    """
    s = tuple(int(x) for x in s)
    if not s:
        raise DomainError("empty argument list")
    if any(x > 0 for x in s):
        raise DomainError("arguments must be non-positive integers")
    weight = sum(-x for x in s)
    depth = len(s)

    if mode == DELTA_SYMBOLIC:
        dirs = _delta_directions(s)
    elif mode == EXACT:
        if any(x == 0 for x in s):
            raise DomainError("exact mode needs strictly negative arguments")
        dirs = [Fraction(-x) for x in s]
    else:
        raise ValueError(f"unknown direction mode {mode!r}")

    headrooms = (8, 16) if trunc is None else (None,)
    last_err = None
    for headroom in headrooms:
        t = trunc if trunc is not None else default_trunc(weight, depth, headroom)
        try:
            val = gz_renorm_directional(s, dirs, t)
            return ratfunc_limit0(val)
        except PrecisionError as err:
            last_err = err
    raise last_err


def gz_table(max_a: int, max_b: int | None = None, trunc: int | None = None):
    """Rows indexed by b (second argument), columns by a (first argument)."""
    if max_b is None:
        max_b = max_a
    return [
        [gz_renorm((-a, -b), trunc=trunc) for a in range(max_a + 1)]
        for b in range(max_b + 1)
    ]


__all__ = [
    "DELTA_SYMBOLIC",
    "EXACT",
    "default_trunc",
    "gz_character",
    "make_gz_character",
    "gz_birkhoff",
    "gz_renorm_directional",
    "gz_renorm",
    "gz_table",
]
