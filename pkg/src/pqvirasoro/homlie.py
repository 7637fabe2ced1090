"""The two-parameter deformed Virasoro algebra as a Hom-Lie algebra.

Elements live in the span of the generators L_n (n ranging over all
integers) and a central element C. The bracket is

    [L_n, L_m] = ([m]/p^m - [n]/p^n) L_{m+n} + delta_{m+n,0} g(n) C

with [k] the (p,q)-integer and the central weight

    g(n) = (q/p)^(-n) / (6 (1 + (q/p)^n)) * [n-1]/p^(n-1) * [n]/p^n * [n+1]/p^(n+1),

while C brackets to zero with everything. The twist map scales L_n by
1 + (q/p)^n and fixes C. The bracket is skew symmetric and satisfies
the twisted Jacobi identity

    [alpha(x), [y, z]] + [alpha(y), [z, x]] + [alpha(z), [x, y]] = 0,

but the plain Jacobi identity fails, and the twist is deliberately not
a bracket homomorphism. Everything here is computed independently of
the word-rewriting layer so the two can cross-check each other.
"""

from functools import lru_cache

from .field import RatFunc, ZERO, ONE, monomial, pq_int


@lru_cache(maxsize=None)
def _u(k):
    """[k] / p^k as an exact rational function."""
    return pq_int(k) * monomial(1, -k, 0)


@lru_cache(maxsize=None)
def central_g(n):
    """Central weight g(n) of the bracket; g(-n) = -g(n) and g(0) = 0."""
    lead = monomial(1, n, -n) / ((ONE + monomial(1, -n, n)) * 6)
    return lead * _u(n - 1) * _u(n) * _u(n + 1)


class HomLieElement:
    """A finite linear combination of the L_n plus a multiple of C."""

    __slots__ = ("l", "c")

    def __init__(self, l=None, c=ZERO):
        if isinstance(c, int):
            c = RatFunc.from_int(c)
        clean = {}
        if l:
            for n, coeff in l.items():
                if isinstance(coeff, int):
                    coeff = RatFunc.from_int(coeff)
                if not coeff.is_zero():
                    clean[n] = coeff
        self.l = clean
        self.c = c

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def lgen(cls, n, coeff=ONE):
        return cls({n: coeff})

    @classmethod
    def cgen(cls, coeff=ONE):
        return cls(c=coeff)

    def is_zero(self):
        return not self.l and self.c.is_zero()

    def __eq__(self, other):
        if not isinstance(other, HomLieElement):
            return NotImplemented
        return self.l == other.l and self.c == other.c

    def __hash__(self):
        return hash((frozenset(self.l.items()), self.c))

    def __add__(self, other):
        if not isinstance(other, HomLieElement):
            return NotImplemented
        out = dict(self.l)
        for n, coeff in other.l.items():
            out[n] = out[n] + coeff if n in out else coeff
        return HomLieElement(out, self.c + other.c)

    def __neg__(self):
        return HomLieElement({n: -v for n, v in self.l.items()}, -self.c)

    def __sub__(self, other):
        if not isinstance(other, HomLieElement):
            return NotImplemented
        return self + (-other)

    def scale(self, coeff):
        if isinstance(coeff, int):
            coeff = RatFunc.from_int(coeff)
        if coeff.is_zero():
            return HomLieElement.zero()
        return HomLieElement({n: coeff * v for n, v in self.l.items()}, coeff * self.c)

    def __rmul__(self, coeff):
        if isinstance(coeff, (int, RatFunc)):
            return self.scale(coeff)
        return NotImplemented

    def __str__(self):
        parts = []
        for n in sorted(self.l):
            parts.append((f"L({n})", self.l[n]))
        if not self.c.is_zero():
            parts.append(("C", self.c))
        if not parts:
            return "0"
        pieces = []
        for name, coeff in parts:
            cstr = str(coeff)
            sign = " + "
            if cstr.startswith("-"):
                sign = " - "
                cstr = cstr[1:]
            if cstr == "1":
                body = name
            elif any(ch in cstr for ch in "+-/ ") or "*" in cstr:
                body = f"({cstr})*{name}"
            else:
                body = f"{cstr}*{name}"
            if not pieces:
                pieces.append(body if sign == " + " else "-" + body)
            else:
                pieces.append(sign + body)
        return "".join(pieces)

    def __repr__(self):
        return f"HomLieElement({self})"


def vbracket(x, y):
    """Bilinear bracket; C is central, so only L-L pairs contribute."""
    l_out = {}
    c_out = ZERO
    for n, cx in x.l.items():
        for m, cy in y.l.items():
            w = cx * cy
            coeff = _u(m) - _u(n)
            if not coeff.is_zero():
                s = m + n
                add = w * coeff
                l_out[s] = l_out[s] + add if s in l_out else add
            if m + n == 0:
                c_out = c_out + w * central_g(n)
    return HomLieElement(l_out, c_out)


def alpha(x):
    """The twist map: L_n goes to (1 + (q/p)^n) L_n, C is fixed."""
    return HomLieElement(
        {n: coeff * (ONE + monomial(1, -n, n)) for n, coeff in x.l.items()},
        x.c,
    )


def skew_residual(n, m):
    """[L_n, L_m] + [L_m, L_n]; zero including the central component."""
    ln, lm = HomLieElement.lgen(n), HomLieElement.lgen(m)
    return vbracket(ln, lm) + vbracket(lm, ln)


def hom_jacobi_residual(n, m, k):
    """Cyclic sum of [alpha(L_n), [L_m, L_k]]; zero for every triple."""
    ln, lm, lk = (HomLieElement.lgen(i) for i in (n, m, k))
    return (
        vbracket(alpha(ln), vbracket(lm, lk))
        + vbracket(alpha(lm), vbracket(lk, ln))
        + vbracket(alpha(lk), vbracket(ln, lm))
    )


def plain_jacobi_residual(n, m, k):
    """Cyclic sum without the twist; generically nonzero."""
    ln, lm, lk = (HomLieElement.lgen(i) for i in (n, m, k))
    return (
        vbracket(ln, vbracket(lm, lk))
        + vbracket(lm, vbracket(lk, ln))
        + vbracket(lk, vbracket(ln, lm))
    )


def alpha_bracket_gap(n, m):
    """[alpha(L_n), alpha(L_m)] - alpha([L_n, L_m]).

    Nonzero in general: the twist is not a bracket homomorphism.
    """
    ln, lm = HomLieElement.lgen(n), HomLieElement.lgen(m)
    return vbracket(alpha(ln), alpha(lm)) - alpha(vbracket(ln, lm))


def structure_constant_records(window):
    """Bracket coefficients over a symmetric index window, as strings."""
    records = []
    for n in range(-window, window + 1):
        for m in range(-window, window + 1):
            coeff_l = _u(m) - _u(n)
            coeff_c = central_g(n) if m + n == 0 else ZERO
            records.append(
                {
                    "n": n,
                    "m": m,
                    "coeff_L": str(coeff_l),
                    "coeff_C": str(coeff_c),
                }
            )
    return records
