"""Hopf structure on the deformed enveloping algebra.

The coproduct, counit, and antipode are fixed on generators by

    delta(T) = T (x) T            (likewise for the inverse)
    delta(L_n) = L_n (x) T^n + T^n (x) L_n
    delta(C) = C (x) 1 + 1 (x) C
    eps(T) = eps(Tinv) = 1,  eps(L_n) = eps(C) = 0
    S(T^m) = T^(-m),  S(L_n) = -T^(-n) L_n T^(-n),  S(C) = -C

and extended to words multiplicatively (anti-multiplicatively for S).
Tensor squares and cubes are linear combinations of slot tuples of
normal-form words; products are taken slotwise and re-normalized.

A configuration switch reproduces the variant coproduct
delta(C) = C (x) 1 + 1 (x) T, which breaks the counit and antipode
axioms on C; it is kept purely to demonstrate that failure. The
rewrite configuration is threaded through so the alternative form of
the C-commutation relation can be explored as well.
"""

from dataclasses import dataclass, field as dc_field

from .field import RatFunc, ZERO, ONE
from .freealg import (
    AlgebraElement,
    DEFAULT_CONFIG,
    RewriteConfig,
    C,
    L,
    T,
    TINV,
    multiply,
    normalize,
    relation_elements,
    t_word,
    word_sort_key,
    word_str,
)

DELTA_C_MODES = ("corrected", "printed")


@dataclass(frozen=True)
class HopfConfig:
    delta_c: str = "corrected"
    rewrite: RewriteConfig = dc_field(default_factory=lambda: DEFAULT_CONFIG)

    def __post_init__(self):
        if self.delta_c not in DELTA_C_MODES:
            raise ValueError(f"delta_c must be one of {DELTA_C_MODES}")


DEFAULT_HOPF = HopfConfig()


class TensorElement:
    """Linear combination of slot tuples of words (arity 2 or 3)."""

    __slots__ = ("arity", "terms")

    def __init__(self, arity, terms=None):
        if arity not in (2, 3):
            raise ValueError("tensor arity must be 2 or 3")
        self.arity = arity
        clean = {}
        if terms:
            for slots, coeff in terms.items():
                if isinstance(coeff, int):
                    coeff = RatFunc.from_int(coeff)
                if len(slots) != arity:
                    raise ValueError("slot tuple length does not match arity")
                if not coeff.is_zero():
                    clean[slots] = coeff
        self.terms = clean

    @classmethod
    def zero(cls, arity=2):
        return cls(arity)

    @classmethod
    def unit(cls, arity=2):
        return cls(arity, {((),) * arity: ONE})

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        return self.arity == other.arity and self.terms == other.terms

    def __add__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        if self.arity != other.arity:
            raise ValueError("arity mismatch")
        out = dict(self.terms)
        for slots, coeff in other.terms.items():
            out[slots] = out[slots] + coeff if slots in out else coeff
        return TensorElement(self.arity, out)

    def __neg__(self):
        return TensorElement(self.arity, {s: -c for s, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        return self + (-other)

    def scale(self, coeff):
        if isinstance(coeff, int):
            coeff = RatFunc.from_int(coeff)
        if coeff.is_zero():
            return TensorElement(self.arity)
        return TensorElement(self.arity, {s: coeff * c for s, c in self.terms.items()})

    def sorted_terms(self):
        return sorted(
            self.terms.items(),
            key=lambda item: tuple(word_sort_key(w) for w in item[0]),
        )

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for slots, coeff in self.sorted_terms():
            body = "(x)".join(word_str(w) for w in slots)
            cstr = str(coeff)
            sign = " + "
            if cstr.startswith("-"):
                sign = " - "
                cstr = cstr[1:]
            if cstr != "1":
                if any(ch in cstr for ch in "+-/ "):
                    body = f"({cstr})*{body}"
                else:
                    body = f"{cstr}*{body}"
            if not pieces:
                pieces.append(body if sign == " + " else "-" + body)
            else:
                pieces.append(sign + body)
        return "".join(pieces)

    def __repr__(self):
        return f"TensorElement({self})"


def tensor_normalize(t, cfg=DEFAULT_HOPF):
    """Normalize every slot word and redistribute the products."""
    out = {}
    rw = cfg.rewrite
    for slots, coeff in t.terms.items():
        normed = [normalize(AlgebraElement.from_word(w), rw).terms for w in slots]
        stack = [((), coeff)]
        for slot_terms in normed:
            stack = [
                (done + (w,), c * cw)
                for done, c in stack
                for w, cw in slot_terms.items()
            ]
        for done, c in stack:
            out[done] = out[done] + c if done in out else c
    return TensorElement(t.arity, out)


def tensor_multiply(x, y, cfg=DEFAULT_HOPF):
    """Slotwise product of tensors, then slotwise normalization."""
    if x.arity != y.arity:
        raise ValueError("arity mismatch")
    raw = {}
    for s1, c1 in x.terms.items():
        for s2, c2 in y.terms.items():
            slots = tuple(a + b for a, b in zip(s1, s2))
            c = c1 * c2
            raw[slots] = raw[slots] + c if slots in raw else c
    return tensor_normalize(TensorElement(x.arity, raw), cfg)


def _letter_coproduct(letter, cfg):
    sym, n = letter
    if sym == "T":
        w = (letter,)
        return {(w, w): ONE}
    if sym == "C":
        if cfg.delta_c == "printed":
            return {(((("C", 0),)), ()): ONE, ((), (("T", 1),)): ONE}
        return {((("C", 0),), ()): ONE, ((), (("C", 0),)): ONE}
    tn = t_word(n)
    return {((letter,), tn): ONE, (tn, (letter,)): ONE}


def coproduct(x, cfg=DEFAULT_HOPF):
    """Algebra-map extension of the generator coproducts."""
    out = {}
    for word, coeff in x.terms.items():
        partial = {((), ()): coeff}
        for letter in word:
            step = _letter_coproduct(letter, cfg)
            grown = {}
            for (a, b), c in partial.items():
                for (u, v), d in step.items():
                    slots = (a + u, b + v)
                    w = c * d
                    grown[slots] = grown[slots] + w if slots in grown else w
            partial = grown
        for slots, c in partial.items():
            out[slots] = out[slots] + c if slots in out else c
    return tensor_normalize(TensorElement(2, out), cfg)


def counit(x):
    """Sum of the coefficients of the pure T-power words."""
    total = ZERO
    for word, coeff in x.terms.items():
        if all(sym == "T" for sym, _ in word):
            total = total + coeff
    return total


_ANTIPODE_SIGNS = {"T": 1, "C": -1, "L": -1}


def antipode(x, cfg=DEFAULT_HOPF):
    """Anti-homomorphic extension of the generator antipodes."""
    out = {}
    for word, coeff in x.terms.items():
        sign = 1
        letters = []
        for sym, n in reversed(word):
            if sym == "T":
                letters.append(("T", -n))
            elif sym == "C":
                sign = -sign
                letters.append(("C", 0))
            else:
                sign = -sign
                letters.extend(t_word(-n))
                letters.append(("L", n))
                letters.extend(t_word(-n))
        key = tuple(letters)
        add = coeff if sign > 0 else -coeff
        out[key] = out[key] + add if key in out else add
    return normalize(AlgebraElement(out), cfg.rewrite)


def tau_swap(t):
    """Exchange the two slots of an arity-2 tensor."""
    if t.arity != 2:
        raise ValueError("slot swap is defined for arity 2")
    return TensorElement(2, {(b, a): c for (a, b), c in t.terms.items()})


def cocommutativity_residual(x, cfg=DEFAULT_HOPF):
    """coproduct(x) minus its slot swap.

    The generator coproducts are all symmetric under the swap and the
    swap is an algebra map of the tensor square, so this vanishes on
    everything: the coproduct is cocommutative.
    """
    d = coproduct(x, cfg)
    return d - tau_swap(d)


def check_coassoc(x, cfg=DEFAULT_HOPF):
    """(delta (x) id) delta(x) - (id (x) delta) delta(x)."""
    d = coproduct(x, cfg)
    left = {}
    right = {}
    for (w1, w2), c in d.terms.items():
        for (u, v), c2 in coproduct(AlgebraElement.from_word(w1), cfg).terms.items():
            slots = (u, v, w2)
            w = c * c2
            left[slots] = left[slots] + w if slots in left else w
        for (u, v), c2 in coproduct(AlgebraElement.from_word(w2), cfg).terms.items():
            slots = (w1, u, v)
            w = c * c2
            right[slots] = right[slots] + w if slots in right else w
    res = TensorElement(3, left) - TensorElement(3, right)
    return tensor_normalize(res, cfg)


def check_counit(x, cfg=DEFAULT_HOPF):
    """Both counit-axiom residuals, m((id (x) eps) delta(x)) - x first."""
    d = coproduct(x, cfg)
    keep_first = AlgebraElement.zero()
    keep_second = AlgebraElement.zero()
    for (w1, w2), c in d.terms.items():
        e2 = counit(AlgebraElement.from_word(w2))
        if not e2.is_zero():
            keep_first = keep_first + AlgebraElement({w1: c * e2})
        e1 = counit(AlgebraElement.from_word(w1))
        if not e1.is_zero():
            keep_second = keep_second + AlgebraElement({w2: c * e1})
    base = normalize(x, cfg.rewrite)
    return (
        normalize(keep_first, cfg.rewrite) - base,
        normalize(keep_second, cfg.rewrite) - base,
    )


def check_antipode(x, cfg=DEFAULT_HOPF):
    """Both antipode-axiom residuals, m((S (x) id) delta(x)) - eps(x) 1 first."""
    d = coproduct(x, cfg)
    left = AlgebraElement.zero()
    right = AlgebraElement.zero()
    for (w1, w2), c in d.terms.items():
        sw1 = antipode(AlgebraElement.from_word(w1), cfg)
        left = left + multiply(sw1, AlgebraElement.from_word(w2), cfg.rewrite) * c
        sw2 = antipode(AlgebraElement.from_word(w2), cfg)
        right = right + multiply(AlgebraElement.from_word(w1), sw2, cfg.rewrite) * c
    target = AlgebraElement.unit() * counit(x)
    return (
        normalize(left - target, cfg.rewrite),
        normalize(right - target, cfg.rewrite),
    )


def antipode_squared(x, cfg=DEFAULT_HOPF):
    """S(S(x)) - x, compared in normal form."""
    return antipode(antipode(x, cfg), cfg) - normalize(x, cfg.rewrite)


def check_relation_preservation(map_name, relation, n=0, m=1, cfg=DEFAULT_HOPF):
    """Images of a defining relation under delta, S, or eps.

    Returns the list of residuals, one per relation element: tensors
    for delta, algebra elements for S, field values for eps. The
    antipode lands in the opposite algebra, which word reversal
    already accounts for.
    """
    residuals = []
    for elem in relation_elements(relation, n, m, cfg.rewrite):
        if map_name == "delta":
            residuals.append(coproduct(elem, cfg))
        elif map_name == "antipode":
            residuals.append(antipode(elem, cfg))
        elif map_name == "counit":
            residuals.append(counit(elem))
        else:
            raise ValueError("map_name must be delta, antipode, or counit")
    return residuals


def generators(window):
    """Named generators for axiom sweeps: T, Tinv, C, and a window of L_n."""
    out = [
        ("T", AlgebraElement.from_word((T,))),
        ("Tinv", AlgebraElement.from_word((TINV,))),
        ("C", AlgebraElement.from_word((C,))),
    ]
    for n in range(-window, window + 1):
        out.append((f"L({n})", AlgebraElement.from_word((L(n),))))
    return out
