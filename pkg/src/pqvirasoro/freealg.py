"""Words in T, T^-1, L(n), C and the rewriting that reduces them to the
normal-form basis T^d L(n1)^k1 ... L(nm)^km C^e (T-powers collected on the
far left, L-indices strictly increasing, C-powers on the far right).

The oriented rules, applied to adjacent letter pairs:

    T T^-1 -> 1                        T^-1 T -> 1
    L(n) T^s -> p^{-s(n+1)} q^{s(n+1)} T^s L(n)        (s = +1 or -1)
    C T^s   -> (q/p)^s T^s C
    C L(n)  -> (q/p)^n L(n) C          [variant "eq811": q^n L(n) C]
    L(n) L(m) -> q^{m-n} p^{n-m} L(m) L(n)
                 + p^n q^{-n} * bracket_env(n, m)      (n > m)

where bracket_env(n, m) carries the L(n+m) term and, when m == -n, the
central C term.  Every rule strictly decreases a lexicographic measure
(see ``measure``), so reduction terminates; the suite checks empirically
that it is confluent as well.

Elements are immutable in spirit: all operations return fresh values.
"""

from __future__ import annotations

import heapq
import random
from dataclasses import dataclass
from functools import lru_cache

from .field import ONE, P, Q, RatFunc, ZERO, monomial, pq_int

__all__ = [
    "T",
    "TINV",
    "C",
    "L",
    "t_word",
    "AlgebraElement",
    "NormalWord",
    "RewriteConfig",
    "DEFAULT_CONFIG",
    "word_str",
    "word_sort_key",
    "find_redex",
    "rewrite_once",
    "normalize",
    "multiply",
    "equals",
    "bracket_coeff",
    "central_coeff",
    "bracket_env",
    "basis_decompose",
    "measure",
    "random_word",
    "relation_elements",
    "RELATION_NAMES",
    "to_json_dict",
]


# letters: ("T", +1), ("T", -1), ("L", n), ("C", 0)
T = ("T", 1)
TINV = ("T", -1)
C = ("C", 0)


def L(n):
    """The weight-n generator letter."""
    return ("L", int(n))


def t_word(m):
    """The word T^m as a letter tuple (empty for m = 0)."""
    if m >= 0:
        return (T,) * m
    return (TINV,) * (-m)


def _letter_key(letter):
    tag, idx = letter
    if tag == "T":
        return (0, -idx)
    if tag == "L":
        return (1, idx)
    return (2, 0)


def word_sort_key(word):
    """Deterministic order: higher length first, then letter-wise."""
    return (-len(word), tuple(_letter_key(a) for a in word))


def word_str(word):
    """Render a word, merging runs of equal letters into powers."""
    if not word:
        return "1"
    parts = []
    i = 0
    n = len(word)
    while i < n:
        j = i
        while j < n and word[j] == word[i]:
            j += 1
        tag, idx = word[i]
        count = j - i
        if tag == "T":
            e = idx * count
            parts.append("T" if e == 1 else "T^%d" % e)
        elif tag == "L":
            base = "L(%d)" % idx
            parts.append(base if count == 1 else base + "^%d" % count)
        else:
            parts.append("C" if count == 1 else "C^%d" % count)
        i = j
    return " ".join(parts)


class AlgebraElement:
    """Finite Q(p,q)-linear combination of words, as a term map."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for w, c in terms.items():
                if isinstance(c, int):
                    c = RatFunc(c)
                if not c.is_zero():
                    clean[w] = c
        self.terms = clean

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def unit(cls):
        return cls({(): ONE})

    @classmethod
    def from_word(cls, word, coeff=1):
        return cls({tuple(word): coeff})

    @classmethod
    def from_letters(cls, *letters):
        return cls({tuple(letters): ONE})

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        out = dict(self.terms)
        for w, c in other.terms.items():
            s = out.get(w, ZERO) + c
            if s.is_zero():
                out.pop(w, None)
            else:
                out[w] = s
        res = AlgebraElement.__new__(AlgebraElement)
        res.terms = out
        return res

    def __sub__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        res = AlgebraElement.__new__(AlgebraElement)
        res.terms = {w: -c for w, c in self.terms.items()}
        return res

    def __mul__(self, other):
        # word concatenation, extended bilinearly; no rewriting happens here
        if isinstance(other, AlgebraElement):
            out = {}
            for w1, c1 in self.terms.items():
                for w2, c2 in other.terms.items():
                    w = w1 + w2
                    s = out.get(w, ZERO) + c1 * c2
                    if s.is_zero():
                        out.pop(w, None)
                    else:
                        out[w] = s
            res = AlgebraElement.__new__(AlgebraElement)
            res.terms = out
            return res
        if isinstance(other, (int, RatFunc)):
            return self._scaled(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, RatFunc)):
            return self._scaled(other)
        return NotImplemented

    def _scaled(self, c):
        if isinstance(c, int):
            c = RatFunc(c)
        if c.is_zero():
            return AlgebraElement()
        res = AlgebraElement.__new__(AlgebraElement)
        res.terms = {w: c * v for w, v in self.terms.items()}
        return res

    def __eq__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.terms == other.terms

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    def coefficient(self, word):
        return self.terms.get(tuple(word), ZERO)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: word_sort_key(kv[0]))

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for w, c in self.sorted_terms():
            ws = word_str(w)
            cs = str(c)
            neg = cs.startswith("-")
            if neg:
                cs = cs[1:]
            if cs == "1":
                body = ws
            else:
                if c.den == {(0, 0): 1} and len(c.num) > 1:
                    cs = "(%s)" % cs
                body = "%s*%s" % (cs, ws) if ws != "1" else cs
            if not parts:
                parts.append("-" + body if neg else body)
            else:
                parts.append((" - " if neg else " + ") + body)
        return "".join(parts)

    def __repr__(self):
        return "AlgebraElement(%s)" % self


# ---------------------------------------------------------------------------
# structure coefficients
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _u(k):
    # [k]_{p,q} / p^k, the ladder building block of the bracket
    return pq_int(k) * monomial(1, -k, 0)


@lru_cache(maxsize=None)
def bracket_coeff(n, m):
    """Coefficient of L(n+m) in the environment bracket of L(n), L(m)."""
    return _u(m) - _u(n)


@lru_cache(maxsize=None)
def central_coeff(n):
    """Coefficient of C in the environment bracket of L(n), L(-n)."""
    ratio_n = monomial(1, -n, n)  # (q/p)^n
    return (monomial(1, n, -n) / (6 * (ONE + ratio_n))) \
        * _u(n - 1) * _u(n) * _u(n + 1)


def bracket_env(n, m):
    """Environment bracket of L(n) and L(m) as a normalized element:
    bracket_coeff(n,m) * L(n+m) plus, when m == -n, central_coeff(n) * C.
    """
    terms = {(L(n + m),): bracket_coeff(n, m)}
    if n + m == 0:
        terms[(C,)] = central_coeff(n)
    return AlgebraElement(terms)


# ---------------------------------------------------------------------------
# rewriting
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RewriteConfig:
    """Rewrite-system options.

    r5_variant selects the orientation of the C / L(n) exchange rule:
    "standard" uses the p^n-weighted relation, "eq811" the unweighted one.
    """

    r5_variant: str = "standard"

    def __post_init__(self):
        if self.r5_variant not in ("standard", "eq811"):
            raise ValueError("unknown r5_variant %r" % (self.r5_variant,))


DEFAULT_CONFIG = RewriteConfig()


def _is_redex(a, b):
    ta = a[0]
    tb = b[0]
    if ta == "T":
        return tb == "T" and a[1] == -b[1]
    if ta == "L":
        return tb == "T" or (tb == "L" and a[1] > b[1])
    # ta == "C"
    return tb in ("T", "L")


def find_redex(word, strategy="leftmost"):
    """Index of the redex pair chosen by the strategy, or None."""
    n = len(word) - 1
    if strategy == "leftmost":
        rng = range(n)
    elif strategy == "rightmost":
        rng = range(n - 1, -1, -1)
    else:
        raise ValueError("unknown strategy %r" % (strategy,))
    for i in rng:
        if _is_redex(word[i], word[i + 1]):
            return i
    return None


@lru_cache(maxsize=None)
def _branches(a, b, variant):
    """Replacement terms for the adjacent pair (a, b): ((coeff, letters), ...)."""
    ta, ia = a
    tb, ib = b
    if ta == "T":
        return ((ONE, ()),)
    if ta == "L" and tb == "T":
        return ((monomial(1, -ib * (ia + 1), ib * (ia + 1)), (b, a)),)
    if ta == "C" and tb == "T":
        return ((monomial(1, -ib, ib), (b, a)),)
    if ta == "C" and tb == "L":
        if variant == "eq811":
            return ((monomial(1, 0, ib), (b, a)),)
        return ((monomial(1, -ib, ib), (b, a)),)
    # L(n) L(m) with n > m
    n, m = ia, ib
    out = [(monomial(1, n - m, m - n), (b, a))]
    weight = monomial(1, n, -n)
    mid = weight * bracket_coeff(n, m)
    if not mid.is_zero():
        out.append((mid, (L(n + m),)))
    if n + m == 0:
        cc = weight * central_coeff(n)
        if not cc.is_zero():
            out.append((cc, (C,)))
    return tuple(out)


def rewrite_once(word, strategy="leftmost", cfg=DEFAULT_CONFIG):
    """One rewrite step at the strategy's redex, or None if word is normal."""
    i = find_redex(word, strategy)
    if i is None:
        return None
    out = []
    for coeff, repl in _branches(word[i], word[i + 1], cfg.r5_variant):
        out.append((coeff, word[:i] + repl + word[i + 2:]))
    return out


def _accumulate(store, word, coeff):
    s = store.get(word, ZERO) + coeff
    if s.is_zero():
        store.pop(word, None)
    else:
        store[word] = s


def _neg_measure(word):
    return tuple(-v for v in measure(word))


def normalize(x, cfg=DEFAULT_CONFIG, strategy="leftmost"):
    """Rewrite x to its unique normal form.

    Words are processed in decreasing order of the termination measure.
    Every rewrite strictly decreases the measure, so by the time a word is
    popped all contributions to its coefficient have been accumulated and
    each distinct word is reduced exactly once.
    """
    if isinstance(x, tuple):
        x = AlgebraElement.from_word(x)
    coeffs = dict(x.terms)
    heap = [(_neg_measure(word), word) for word in coeffs]
    heapq.heapify(heap)
    result = {}
    while heap:
        _, word = heapq.heappop(heap)
        coeff = coeffs.pop(word, None)
        if coeff is None:
            continue
        i = find_redex(word, strategy)
        if i is None:
            _accumulate(result, word, coeff)
            continue
        for c2, repl in _branches(word[i], word[i + 1], cfg.r5_variant):
            w2 = word[:i] + repl + word[i + 2:]
            fresh = w2 not in coeffs
            _accumulate(coeffs, w2, coeff * c2)
            if fresh and w2 in coeffs:
                heapq.heappush(heap, (_neg_measure(w2), w2))
    return AlgebraElement(result)


def multiply(x, y, cfg=DEFAULT_CONFIG):
    """Product in the quantum group: concatenate bilinearly, then normalize."""
    return normalize(x * y, cfg)


def equals(x, y, cfg=DEFAULT_CONFIG):
    """True iff x and y have identical normal forms."""
    return normalize(x, cfg) == normalize(y, cfg)


def measure(word):
    """Termination measure, strictly decreasing under every rewrite rule.

    Components (lexicographic): number of L letters; number of L-index
    inversions; displacement sum (for each T letter the count of L/C
    letters to its left, plus for each C letter the count of L letters to
    its right); number of T letters.
    """
    l_count = 0
    inversions = 0
    displacement = 0
    t_count = 0
    l_indices = []
    lc_seen = 0  # L or C letters so far
    l_after = [0] * (len(word) + 1)
    acc = 0
    for k in range(len(word) - 1, -1, -1):
        l_after[k] = acc
        if word[k][0] == "L":
            acc += 1
    for k, (tag, idx) in enumerate(word):
        if tag == "L":
            for prev in l_indices:
                if prev > idx:
                    inversions += 1
            l_indices.append(idx)
            l_count += 1
            lc_seen += 1
        elif tag == "T":
            displacement += lc_seen
            t_count += 1
        else:
            displacement += l_after[k]
            lc_seen += 1
    return (l_count, inversions, displacement, t_count)


def random_word(rng, max_len=12, index_range=(-6, 6)):
    """Random word over the full alphabet, for confluence sweeps."""
    lo, hi = index_range
    letters = [T, TINV, C] + [L(n) for n in range(lo, hi + 1)]
    length = rng.randint(1, max_len)
    return tuple(rng.choice(letters) for _ in range(length))


def make_rng(seed):
    return random.Random(seed)


# ---------------------------------------------------------------------------
# the normal-form basis
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class NormalWord:
    """Basis word T^t_exp L(n1)^k1 ... L(nm)^km C^c_exp.

    l_part is a tuple of (index, multiplicity) pairs with strictly
    increasing indices and positive multiplicities; c_exp >= 0.
    """

    t_exp: int = 0
    l_part: tuple = ()
    c_exp: int = 0

    def __post_init__(self):
        if self.c_exp < 0:
            raise ValueError("C exponent must be nonnegative")
        last = None
        for n, k in self.l_part:
            if k <= 0:
                raise ValueError("L multiplicities must be positive")
            if last is not None and n <= last:
                raise ValueError("L indices must be strictly increasing")
            last = n

    @classmethod
    def from_word(cls, word):
        """Parse a letter tuple that is already in normal form."""
        i = 0
        n = len(word)
        t_exp = 0
        while i < n and word[i][0] == "T":
            t_exp += word[i][1]
            i += 1
        if i != abs(t_exp):
            raise ValueError("word is not normal: mixed T signs")
        l_part = []
        while i < n and word[i][0] == "L":
            idx = word[i][1]
            k = 0
            while i < n and word[i] == ("L", idx):
                k += 1
                i += 1
            if l_part and l_part[-1][0] >= idx:
                raise ValueError("word is not normal: L indices not increasing")
            l_part.append((idx, k))
        c_exp = 0
        while i < n and word[i][0] == "C":
            c_exp += 1
            i += 1
        if i != n:
            raise ValueError("word is not normal: %s" % word_str(word))
        return cls(t_exp, tuple(l_part), c_exp)

    def word(self):
        w = t_word(self.t_exp)
        for n, k in self.l_part:
            w += (L(n),) * k
        return w + (C,) * self.c_exp

    def t_factor(self):
        """The T^d tensor factor of the grouplike/enveloping factorization."""
        return t_word(self.t_exp)

    def lc_factor(self):
        """The L..C tensor factor of the factorization."""
        w = ()
        for n, k in self.l_part:
            w += (L(n),) * k
        return w + (C,) * self.c_exp

    def degree(self):
        return abs(self.t_exp) + sum(k for _, k in self.l_part) + self.c_exp

    def __str__(self):
        return word_str(self.word())


def basis_decompose(x):
    """Split a normalized element into (NormalWord, coefficient) pairs.

    Each NormalWord separates into its T-power factor and its L/C factor
    (``t_factor``/``lc_factor``), exhibiting the tensor factorization of
    the quantum group over its grouplike subalgebra.
    """
    out = []
    for w, c in x.sorted_terms():
        out.append((NormalWord.from_word(w), c))
    return out


# ---------------------------------------------------------------------------
# defining relations, as elements that must normalize to zero
# ---------------------------------------------------------------------------

RELATION_NAMES = ("R1", "R2", "R3", "R4", "R5")


def relation_elements(name, n=0, m=1, cfg=DEFAULT_CONFIG):
    """The defining relations as lhs - rhs elements.

    R1: T T^-1 = 1 = T^-1 T                      (no parameters)
    R2: T^m L(n) = p^{m(n+1)} q^{-m(n+1)} L(n) T^m
    R3: q^m T^m C = p^m C T^m
    R4: q^n p^-n L(n) L(m) - q^m p^-m L(m) L(n) = bracket_env(n, m)
    R5: q^n L(n) C = p^n C L(n)   [variant "eq811": q^n L(n) C = C L(n)]
    """
    if name == "R1":
        unit = AlgebraElement.unit()
        return [AlgebraElement.from_letters(T, TINV) - unit,
                AlgebraElement.from_letters(TINV, T) - unit]
    if name == "R2":
        lhs = AlgebraElement.from_word(t_word(m) + (L(n),))
        rhs = AlgebraElement.from_word((L(n),) + t_word(m),
                                       monomial(1, m * (n + 1), -m * (n + 1)))
        return [lhs - rhs]
    if name == "R3":
        lhs = AlgebraElement.from_word(t_word(m) + (C,), monomial(1, 0, m))
        rhs = AlgebraElement.from_word((C,) + t_word(m), monomial(1, m, 0))
        return [lhs - rhs]
    if name == "R4":
        lhs = AlgebraElement({(L(n), L(m)): monomial(1, -n, n)}) \
            + AlgebraElement({(L(m), L(n)): -monomial(1, -m, m)})
        return [lhs - bracket_env(n, m)]
    if name == "R5":
        lhs = AlgebraElement.from_word((L(n), C), monomial(1, 0, n))
        if cfg.r5_variant == "eq811":
            rhs = AlgebraElement.from_letters(C, L(n))
        else:
            rhs = AlgebraElement.from_word((C, L(n)), monomial(1, n, 0))
        return [lhs - rhs]
    raise ValueError("unknown relation %r" % (name,))


def to_json_dict(x):
    """Deterministic word-string -> coefficient-string map."""
    return {word_str(w): str(c) for w, c in x.sorted_terms()}
