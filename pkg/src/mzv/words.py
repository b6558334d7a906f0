"""Tensor words over graded alphabets and their products.

Three alphabets matter here: composition letters z_s (s >= 1) with
z_s z_t = z_{s+t}, binary letters x_0/x_1 (no product), and weighted pairs
<s|r> with componentwise addition. Words multiply by shuffle, by the
weight-lambda mixable shuffle (lambda = 1 is the quasi-shuffle/stuffle), or by
the shuffle transported from the binary side.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb, factorial

from .ratfunc import RatFunc


class MixedAlphabetError(TypeError):
    pass


class UnsupportedMergeError(TypeError):
    pass


class DomainError(ValueError):
    pass


@dataclass(frozen=True)
class Letter:
    kind: str          # 'z' | 'x' | 'zr' | 'gen'
    s: object = None   # z: exponent >= 1; zr: integer exponent
    r: object = None   # zr: direction (Fraction or RatFunc)
    gid: object = None
    _grade: int = 0

    @staticmethod
    def z(s: int) -> "Letter":
        if s < 1:
            raise DomainError("z letters need s >= 1")
        return Letter("z", s=s, _grade=s)

    @staticmethod
    def x(bit: int) -> "Letter":
        if bit not in (0, 1):
            raise DomainError("x letters are x0 or x1")
        return Letter("x", s=bit, _grade=1)

    @staticmethod
    def zr(s: int, r) -> "Letter":
        if not isinstance(r, RatFunc):
            r = Fraction(r)
        return Letter("zr", s=s, r=r, _grade=abs(s))

    @staticmethod
    def gen(gid, grade=1) -> "Letter":
        return Letter("gen", gid=gid, _grade=grade)

    @property
    def grade(self) -> int:
        return self._grade

    def __mul__(self, other: "Letter") -> "Letter":
        if self.kind != other.kind:
            raise MixedAlphabetError("cannot merge letters from different alphabets")
        if self.kind == "z":
            return Letter.z(self.s + other.s)
        if self.kind == "zr":
            return Letter.zr(self.s + other.s, self.r + other.r)
        raise UnsupportedMergeError(f"{self.kind!r} letters have no product")

    def __str__(self):
        if self.kind == "z":
            return f"z{self.s}"
        if self.kind == "x":
            return str(self.s)
        if self.kind == "zr":
            return f"({self.s}|{self.r})"
        return f"g[{self.gid}]"


class Word:
    """Immutable tensor word; the empty word is the algebra unit."""

    __slots__ = ("letters", "_hash")

    def __init__(self, letters=()):
        letters = tuple(letters)
        kinds = {l.kind for l in letters}
        if len(kinds) > 1:
            raise MixedAlphabetError(f"mixed alphabets in one word: {kinds}")
        object.__setattr__(self, "letters", letters)
        object.__setattr__(self, "_hash", hash(letters))

    @property
    def kind(self):
        return self.letters[0].kind if self.letters else None

    def weight(self) -> int:
        return sum(l.grade for l in self.letters)

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __getitem__(self, i):
        if isinstance(i, slice):
            return Word(self.letters[i])
        return self.letters[i]

    def __add__(self, other: "Word") -> "Word":
        return Word(self.letters + other.letters)

    def __eq__(self, other):
        return isinstance(other, Word) and self.letters == other.letters

    def __hash__(self):
        return self._hash

    def __bool__(self):
        return bool(self.letters)

    def __str__(self):
        return "".join(str(l) for l in self.letters) if self.letters else "1"

    def __repr__(self):
        return f"Word({self})"

    @staticmethod
    def from_composition(comp) -> "Word":
        return Word(tuple(Letter.z(s) for s in comp))

    @staticmethod
    def from_bits(bits) -> "Word":
        if isinstance(bits, str):
            bits = [int(b) for b in bits]
        return Word(tuple(Letter.x(b) for b in bits))

    @staticmethod
    def from_sr(pairs) -> "Word":
        return Word(tuple(Letter.zr(s, r) for s, r in pairs))

    def composition(self):
        if any(l.kind != "z" for l in self.letters):
            raise DomainError("not a composition word")
        return tuple(l.s for l in self.letters)


EMPTY = Word()


class WordSum:
    """Finite formal sum of words with exact scalar coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        cleaned = {}
        if terms:
            for w, c in (terms.items() if isinstance(terms, dict) else terms):
                if not isinstance(c, RatFunc):
                    c = Fraction(c)
                if c:
                    cleaned[w] = cleaned[w] + c if w in cleaned else c
        self.terms = {w: c for w, c in cleaned.items() if c}

    @staticmethod
    def single(word, coeff=1) -> "WordSum":
        return WordSum({word: coeff})

    @staticmethod
    def zero() -> "WordSum":
        return WordSum()

    def items(self):
        return self.terms.items()

    def __add__(self, other):
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out[w] + c if w in out else c
        return WordSum(out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, scalar) -> "WordSum":
        return WordSum({w: scalar * c for w, c in self.terms.items()})

    def __eq__(self, other):
        return isinstance(other, WordSum) and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def coeff(self, word):
        return self.terms.get(word, Fraction(0))

    def total_mass(self):
        return sum(self.terms.values(), Fraction(0))

    def sorted_items(self):
        return sorted(self.terms.items(), key=lambda t: _word_sort_key(t[0]))

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for w, c in self.sorted_items():
            if c == 1:
                parts.append(str(w))
            else:
                parts.append(f"{c}*{w}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"WordSum({self})"


def _word_sort_key(w: Word):
    """Composition-lexicographic ordering: binary words compare by their
    x0-run pattern, other alphabets letter by letter."""
    if w.kind == "x":
        key = []
        run = 0
        for letter in w:
            if letter.s == 0:
                run += 1
            else:
                key.append(run + 1)
                run = 0
        if run:
            key.append(Fraction(1, run + 1))  # trailing x0 run sorts before
        return (0, tuple(key))
    if w.kind == "zr":
        return (1, tuple((l.s, str(l.r)) for l in w))
    if w.kind == "gen":
        return (2, tuple(str(l.gid) for l in w))
    return (3, w.composition() if w else ())


# -- mixable shuffle: recursive route --------------------------------------

_MIX_CACHE: dict = {}


def _mix_pair(a: Word, b: Word, lam) -> dict:
    """Mixable shuffle of two words; lambda = 0 is the plain shuffle.

    Lattice-path recursion on (len a, len b); coefficients count paths, so the
    complexity is binomial rather than factorial.
    """
    key = (a, b, lam)
    hit = _MIX_CACHE.get(key)
    if hit is not None:
        return hit
    if not a:
        out = {b: Fraction(1)}
    elif not b:
        out = {a: Fraction(1)}
    else:
        out = {}
        for head, rest in ((a[0], _mix_pair(a[1:], b, lam)), (b[0], _mix_pair(a, b[1:], lam))):
            for w, c in rest.items():
                nw = Word((head,)) + w
                out[nw] = out.get(nw, Fraction(0)) + c
        if lam:
            merged = a[0] * b[0]
            for w, c in _mix_pair(a[1:], b[1:], lam).items():
                nw = Word((merged,)) + w
                out[nw] = out.get(nw, Fraction(0)) + lam * c
    _MIX_CACHE[key] = out
    return out


def mixable_shuffle(u, v, lam) -> WordSum:
    """Bilinear mixable shuffle product of weight lambda."""
    lam = lam if isinstance(lam, RatFunc) else Fraction(lam)
    u = u if isinstance(u, WordSum) else WordSum.single(u)
    v = v if isinstance(v, WordSum) else WordSum.single(v)
    out = {}
    for w1, c1 in u.items():
        for w2, c2 in v.items():
            c = c1 * c2
            for w, m in _mix_pair(w1, w2, lam).items():
                out[w] = out.get(w, Fraction(0)) + c * m
    return WordSum(out)


def shuffle(u, v) -> WordSum:
    return mixable_shuffle(u, v, 0)


def quasi_shuffle(u, v) -> WordSum:
    return mixable_shuffle(u, v, 1)


# -- mixable shuffle: stuffle enumeration route -----------------------------

def stuffle_pairs(k: int, l: int, r: int):
    """All pairs (phi, psi) of order-preserving injections [k] -> [k+l-r],
    [l] -> [k+l-r] whose images jointly cover the range, as 0-indexed tuples.
    """
    if k < 1 or l < 1:
        raise ValueError("stuffle pairs need k, l >= 1")
    if r < 0 or r > min(k, l):
        raise ValueError(f"overlap r = {r} out of range [0, {min(k, l)}]")
    n = k + l - r
    out = []
    for phi in combinations(range(n), k):
        rest = [i for i in range(n) if i not in phi]
        if len(rest) > l:
            continue
        need = l - len(rest)
        for overlap in combinations(phi, need):
            psi = tuple(sorted(rest + list(overlap)))
            out.append((phi, psi))
    return out


def stuffle_pair_count(k, l, r):
    return comb(k + l - r, k) * comb(k, r)


def merge_by_maps(a: Word, b: Word, phi, psi, n: int) -> Word:
    """The word whose i-th slot is a_{phi^-1(i)}, b_{psi^-1(i)}, or their product."""
    inv_phi = {p: i for i, p in enumerate(phi)}
    inv_psi = {p: i for i, p in enumerate(psi)}
    letters = []
    for i in range(n):
        ia = inv_phi.get(i)
        ib = inv_psi.get(i)
        if ia is not None and ib is not None:
            letters.append(a[ia] * b[ib])
        elif ia is not None:
            letters.append(a[ia])
        else:
            letters.append(b[ib])
    return Word(letters)


def mixable_shuffle_enum(u, v, lam) -> WordSum:
    """Mixable shuffle by direct enumeration of stuffle pairs."""
    lam = lam if isinstance(lam, RatFunc) else Fraction(lam)
    u = u if isinstance(u, WordSum) else WordSum.single(u)
    v = v if isinstance(v, WordSum) else WordSum.single(v)
    out = {}

    def add(w, c):
        out[w] = out.get(w, Fraction(0)) + c

    for w1, c1 in u.items():
        for w2, c2 in v.items():
            c = c1 * c2
            k, l = len(w1), len(w2)
            if k == 0 or l == 0:
                add(w1 + w2, c)
                continue
            for r in range(0, min(k, l) + 1):
                if r and not lam:
                    break
                scale = c * lam**r
                for phi, psi in stuffle_pairs(k, l, r):
                    add(merge_by_maps(w1, w2, phi, psi, k + l - r), scale)
    return WordSum(out)


# -- deconcatenation coproduct ----------------------------------------------

def deconcat_coproduct(w: Word):
    """All splits prefix (x) suffix, trivial ends included."""
    return [(w[:j], w[j:]) for j in range(len(w) + 1)]


def counit(x) -> Fraction:
    """Projection onto the empty-word component."""
    if isinstance(x, Word):
        return Fraction(1) if not x else Fraction(0)
    return x.coeff(EMPTY)


class TensorSum:
    """Sum of w1 (x) w2 with scalar coefficients; componentwise products."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        cleaned = {}
        if terms:
            for pair, c in (terms.items() if isinstance(terms, dict) else terms):
                if not isinstance(c, RatFunc):
                    c = Fraction(c)
                if c:
                    cleaned[pair] = cleaned[pair] + c if pair in cleaned else c
        self.terms = {p: c for p, c in cleaned.items() if c}

    def __add__(self, other):
        out = dict(self.terms)
        for p, c in other.terms.items():
            out[p] = out.get(p, Fraction(0)) + c
        return TensorSum(out)

    def scale(self, scalar):
        return TensorSum({p: scalar * c for p, c in self.terms.items()})

    def __eq__(self, other):
        return isinstance(other, TensorSum) and self.terms == other.terms

    def product(self, other, lam) -> "TensorSum":
        out = {}
        for (a1, a2), c1 in self.terms.items():
            for (b1, b2), c2 in other.terms.items():
                left = mixable_shuffle(WordSum.single(a1), WordSum.single(b1), lam)
                right = mixable_shuffle(WordSum.single(a2), WordSum.single(b2), lam)
                c = c1 * c2
                for w1, d1 in left.items():
                    for w2, d2 in right.items():
                        key = (w1, w2)
                        out[key] = out.get(key, Fraction(0)) + c * d1 * d2
        return TensorSum(out)


def coproduct(x) -> TensorSum:
    """Deconcatenation coproduct, extended linearly."""
    if isinstance(x, Word):
        x = WordSum.single(x)
    out = {}
    for w, c in x.items():
        for pre, suf in deconcat_coproduct(w):
            key = (pre, suf)
            out[key] = out.get(key, Fraction(0)) + c
    return TensorSum(out)


# -- Hoffman exponential / logarithm ----------------------------------------

def _compositions(n: int):
    """All compositions of n as tuples, in lexicographic generation order."""
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in _compositions(n - first):
            yield (first,) + rest


def _blocks(word: Word, comp):
    letters = []
    pos = 0
    for size in comp:
        block = word[pos]
        for i in range(pos + 1, pos + size):
            block = block * word[i]
        letters.append(block)
        pos += size
    return Word(letters)


def hoffman_exp(u) -> WordSum:
    """Hoffman isomorphism from the shuffle to the quasi-shuffle Hopf algebra."""
    u = u if isinstance(u, WordSum) else WordSum.single(u)
    out = {}
    for w, c in u.items():
        for comp in _compositions(len(w)):
            coeff = c * Fraction(1, _prod(factorial(i) for i in comp))
            bw = _blocks(w, comp)
            out[bw] = out.get(bw, Fraction(0)) + coeff
    return WordSum(out)


def hoffman_log(u) -> WordSum:
    """Inverse of hoffman_exp."""
    u = u if isinstance(u, WordSum) else WordSum.single(u)
    out = {}
    for w, c in u.items():
        n = len(w)
        for comp in _compositions(n):
            k = len(comp)
            coeff = c * Fraction((-1) ** (n - k), _prod(comp))
            bw = _blocks(w, comp)
            out[bw] = out.get(bw, Fraction(0)) + coeff
    return WordSum(out)


def _prod(it):
    out = 1
    for x in it:
        out *= x
    return out


# -- binary <-> composition translation -------------------------------------

def translate_xz(w: Word) -> Word:
    """x_0^{s_1-1} x_1 ... x_0^{s_k-1} x_1  ->  z_{s_1} ... z_{s_k}."""
    if not w:
        return EMPTY
    if w.kind != "x":
        raise DomainError("expected a binary word")
    comp = []
    run = 0
    for letter in w:
        if letter.s == 0:
            run += 1
        else:
            comp.append(run + 1)
            run = 0
    if run:
        raise DomainError("binary word must end in x1 to translate")
    return Word.from_composition(comp)


def translate_zx(w: Word) -> Word:
    if not w:
        return EMPTY
    bits = []
    for s in w.composition():
        bits.extend([0] * (s - 1))
        bits.append(1)
    return Word.from_bits(bits)


def transported_shuffle(u, v) -> WordSum:
    """Shuffle computed on the binary side and carried back to compositions."""
    u = u if isinstance(u, WordSum) else WordSum.single(u)
    v = v if isinstance(v, WordSum) else WordSum.single(v)
    out = {}
    for w1, c1 in u.items():
        for w2, c2 in v.items():
            sh = mixable_shuffle(
                WordSum.single(translate_zx(w1)), WordSum.single(translate_zx(w2)), 0
            )
            c = c1 * c2
            for w, m in sh.items():
                zw = translate_xz(w)
                out[zw] = out.get(zw, Fraction(0)) + c * m
    return WordSum(out)


# -- duality involution ------------------------------------------------------

def tau_dual(comp) -> tuple:
    """Block-transposing involution on admissible compositions."""
    comp = tuple(comp)
    if not comp or comp[0] < 2 or any(s < 1 for s in comp):
        raise DomainError("duality needs s_1 >= 2 and s_i >= 1")
    # comp = (1+b_1, 1^{a_1-1}, ..., 1+b_k, 1^{a_k-1})
    blocks = []
    i = 0
    while i < len(comp):
        b = comp[i] - 1
        i += 1
        a = 1
        while i < len(comp) and comp[i] == 1:
            a += 1
            i += 1
        blocks.append((b, a))
    out = []
    for b, a in reversed(blocks):
        out.append(1 + a)
        out.extend([1] * (b - 1))
    return tuple(out)


# -- derivation on weighted-pair words ---------------------------------------

def word_d(w: Word) -> WordSum:
    """Leibniz extension of d<s|r> = r <s-1|r> over the word positions."""
    if w and w.kind != "zr":
        raise DomainError("the derivation acts on weighted-pair words")
    out = {}
    for i, letter in enumerate(w):
        nw = Word(w.letters[:i] + (Letter.zr(letter.s - 1, letter.r),) + w.letters[i + 1:])
        out[nw] = out.get(nw, Fraction(0) if not isinstance(letter.r, RatFunc) else letter.r * 0) + letter.r
    return WordSum(out)


# -- text syntax --------------------------------------------------------------

def parse_rational(text: str) -> Fraction:
    return Fraction(text.strip())


def parse_z_word(text: str) -> Word:
    text = text.strip()
    if not text:
        return EMPTY
    return Word.from_composition(int(p) for p in text.split(","))


def parse_x_word(text: str) -> Word:
    text = text.strip()
    if any(ch not in "01" for ch in text):
        raise DomainError(f"binary word must consist of 0/1: {text!r}")
    return Word.from_bits(text)


def parse_m_word(text: str) -> Word:
    """Weighted-pair word syntax: "(-2|3/2)(-1|1/2)"."""
    text = text.strip()
    if not text:
        return EMPTY
    if not (text.startswith("(") and text.endswith(")")):
        raise DomainError(f"bad weighted-pair word: {text!r}")
    pairs = []
    for chunk in text[1:-1].split(")("):
        s_txt, r_txt = chunk.split("|")
        pairs.append((int(s_txt), Fraction(r_txt)))
    return Word.from_sr(pairs)


def render_word(w: Word) -> str:
    if not w:
        return "1"
    if w.kind == "x":
        return "".join(str(l.s) for l in w)
    return str(w)


def render_wordsum(ws: WordSum) -> str:
    if not ws:
        return "0"
    parts = []
    for w, c in ws.sorted_items():
        body = render_word(w)
        parts.append(body if c == 1 else f"{c}·{body}")
    return " + ".join(parts).replace("+ -", "- ")


__all__ = [
    "Letter",
    "Word",
    "WordSum",
    "TensorSum",
    "EMPTY",
    "MixedAlphabetError",
    "UnsupportedMergeError",
    "DomainError",
    "shuffle",
    "quasi_shuffle",
    "mixable_shuffle",
    "mixable_shuffle_enum",
    "stuffle_pairs",
    "stuffle_pair_count",
    "merge_by_maps",
    "deconcat_coproduct",
    "coproduct",
    "counit",
    "hoffman_exp",
    "hoffman_log",
    "translate_xz",
    "translate_zx",
    "transported_shuffle",
    "tau_dual",
    "word_d",
    "parse_z_word",
    "parse_x_word",
    "parse_m_word",
    "parse_rational",
    "render_word",
    "render_wordsum",
]
