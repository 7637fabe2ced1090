"""Truncated Fock-space realization of the deformed oscillator.

The oscillator acts on the column space spanned by |0>, ..., |N-1>:
the raising operator sends |k> to |k+1> and the lowering operator
sends |k> to lam_k |k-1>, where lam_k is fixed by the defining
relation of the chosen mode together with lam_0 = 0:

    classical:  a a+ - a+ a = 1          lam_k = k
    one_param:  a a+ - q a+ a = 1        lam_k = (q^k - 1)/(q - 1)
    two_param:  p a a+ - q a+ a = 1      lam_k = (p^k - q^k)/((p - q) p^k)

The generators L_n = (a+)^(n+1) a (n >= -1) then give matrices on
which the deformed Virasoro relations can be checked by exact
arithmetic, entirely independently of the symbolic rewriting engine.
Truncation spoils the top edge of the matrix, so identities are only
asserted on guarded columns that no intermediate state can push past
the cutoff.
"""

from dataclasses import dataclass

from .field import RatFunc, ZERO, ONE, P, Q, monomial, q_int, pq_int

MODES = ("classical", "one_param", "two_param")


class FockOperator:
    """Sparse N x N matrix of exact rational-function entries.

    entries maps (row, col) to a nonzero RatFunc; the operator sends
    basis column |k> to sum_i entries[(i, k)] |i>.
    """

    __slots__ = ("dim", "entries")

    def __init__(self, dim, entries=None):
        if not isinstance(dim, int) or dim < 1:
            raise ValueError("dimension must be a positive integer")
        self.dim = dim
        clean = {}
        if entries:
            for pos, val in entries.items():
                if isinstance(val, int):
                    val = RatFunc.from_int(val)
                if not val.is_zero():
                    clean[pos] = val
        self.entries = clean

    @classmethod
    def zero(cls, dim):
        return cls(dim)

    @classmethod
    def identity(cls, dim):
        return cls(dim, {(k, k): ONE for k in range(dim)})

    def __eq__(self, other):
        if not isinstance(other, FockOperator):
            return NotImplemented
        return self.dim == other.dim and self.entries == other.entries

    def __hash__(self):
        return hash((self.dim, frozenset(self.entries.items())))

    def __add__(self, other):
        if not isinstance(other, FockOperator):
            return NotImplemented
        if self.dim != other.dim:
            raise ValueError("dimension mismatch")
        out = dict(self.entries)
        for pos, val in other.entries.items():
            out[pos] = out[pos] + val if pos in out else val
        return FockOperator(self.dim, out)

    def __neg__(self):
        return FockOperator(self.dim, {pos: -val for pos, val in self.entries.items()})

    def __sub__(self, other):
        if not isinstance(other, FockOperator):
            return NotImplemented
        return self + (-other)

    def scale(self, c):
        if isinstance(c, int):
            c = RatFunc.from_int(c)
        if c.is_zero():
            return FockOperator.zero(self.dim)
        return FockOperator(self.dim, {pos: c * val for pos, val in self.entries.items()})

    def __mul__(self, other):
        """Matrix product with another operator, or scaling by a coefficient."""
        if isinstance(other, FockOperator):
            if self.dim != other.dim:
                raise ValueError("dimension mismatch")
            by_row = {}
            for (k, j), val in other.entries.items():
                by_row.setdefault(k, []).append((j, val))
            out = {}
            for (i, k), u in self.entries.items():
                for j, v in by_row.get(k, ()):
                    w = u * v
                    pos = (i, j)
                    out[pos] = out[pos] + w if pos in out else w
            return FockOperator(self.dim, out)
        if isinstance(other, (int, RatFunc)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, RatFunc)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("operator powers must be nonnegative integers")
        out = FockOperator.identity(self.dim)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base if n > 1 else base
            n >>= 1
        return out

    def column(self, k):
        """The image of |k> as a map row -> coefficient."""
        return {i: val for (i, j), val in self.entries.items() if j == k}

    def restrict(self, cols):
        """Keep only the columns in cols, zeroing the rest."""
        keep = set(cols)
        return FockOperator(self.dim, {pos: val for pos, val in self.entries.items() if pos[1] in keep})

    def is_zero_on(self, cols):
        keep = set(cols)
        return not any(pos[1] in keep for pos in self.entries)

    def is_zero(self):
        return not self.entries

    def map_entries(self, fn):
        """Apply fn to every entry (for specializing p or q)."""
        return FockOperator(self.dim, {pos: fn(val) for pos, val in self.entries.items()})

    def __str__(self):
        if not self.entries:
            return "0"
        parts = []
        for (i, j) in sorted(self.entries):
            parts.append(f"({i},{j}): {self.entries[(i, j)]}")
        return "{" + ", ".join(parts) + "}"

    def __repr__(self):
        return f"FockOperator(dim={self.dim}, nnz={len(self.entries)})"


def lowering_coeff(k, mode):
    """Closed form for lam_k in the given mode."""
    if k == 0:
        return ZERO
    if mode == "classical":
        return RatFunc.from_int(k)
    if mode == "one_param":
        return q_int(k)
    if mode == "two_param":
        return pq_int(k) * monomial(1, -k, 0)
    raise ValueError(f"unknown mode {mode!r}")


def lowering_coeff_iterative(k, mode):
    """Solve the defining recurrence step by step from lam_0 = 0.

    Independent oracle for the closed form: classical lam' = lam + 1,
    one_param lam' = q lam + 1, two_param p lam' - q lam = 1.
    """
    lam = ZERO
    for _ in range(k):
        if mode == "classical":
            lam = lam + ONE
        elif mode == "one_param":
            lam = Q * lam + ONE
        elif mode == "two_param":
            lam = (Q * lam + ONE) / P
        else:
            raise ValueError(f"unknown mode {mode!r}")
    return lam


@dataclass(frozen=True)
class Oscillator:
    mode: str
    dim: int
    a: FockOperator
    a_plus: FockOperator
    lam: tuple

    def __iter__(self):
        yield self.a
        yield self.a_plus


def make_oscillator(N, mode="two_param"):
    """Build the truncated oscillator pair for the given mode."""
    if not isinstance(N, int) or N < 3:
        raise ValueError("truncation dimension must be an integer >= 3")
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}")
    lam = tuple(lowering_coeff(k, mode) for k in range(N))
    a_plus = FockOperator(N, {(k + 1, k): ONE for k in range(N - 1)})
    a = FockOperator(N, {(k - 1, k): lam[k] for k in range(1, N)})
    return Oscillator(mode=mode, dim=N, a=a, a_plus=a_plus, lam=lam)


@dataclass(frozen=True)
class GuardSpec:
    """Column guard against truncation artifacts.

    A word of at most word_length letters, each shifting the state
    index up by at most max_shift, cannot push a state from a safe
    column past the cutoff, so on those columns the truncated matrices
    compute exactly what the untruncated operators would.
    """

    word_length: int
    max_shift: int

    def safe_columns(self, dim):
        top = dim - 1 - self.word_length * max(self.max_shift, 0)
        if top < 0:
            raise ValueError(
                f"no safe columns: dim {dim} too small for words of length "
                f"{self.word_length} with shift {self.max_shift}"
            )
        return range(top + 1)


def make_L(n, osc):
    """The generator L_n = (a+)^(n+1) a as a truncated matrix.

    Only n >= -1 makes sense here: the raising operator is not
    invertible, so (a+)^(n+1) is undefined for n <= -2.
    """
    if not isinstance(n, int) or n < -1:
        raise ValueError("L_n has a Fock image only for integer n >= -1")
    return (osc.a_plus ** (n + 1)) * osc.a


def deformed_commutator(A, B, alpha, beta):
    """alpha*A*B - beta*B*A, exactly."""
    if A.dim != B.dim:
        raise ValueError("dimension mismatch")
    return A * B * alpha - B * A * beta


def _u(k):
    """[k] / p^k, the coefficient weight of the two-parameter bracket."""
    return pq_int(k) * monomial(1, -k, 0)


def bracket_weights(n, m, mode):
    """Coefficients (alpha, beta, gamma) of the mode's bracket relation.

    The relation checked is alpha L_n L_m - beta L_m L_n = gamma L_{m+n}.
    """
    if mode == "classical":
        return ONE, ONE, RatFunc.from_int(m - n)
    if mode == "one_param":
        return Q ** n, Q ** m, q_int(m) - q_int(n)
    if mode == "two_param":
        return monomial(1, -n, n), monomial(1, -m, m), _u(m) - _u(n)
    raise ValueError(f"unknown mode {mode!r}")


def verify_bracket(n, m, osc, guard=None):
    """Residual of the bracket relation for the oscillator's mode.

    Returns alpha L_n L_m - beta L_m L_n - gamma L_{m+n} restricted to
    the guard's safe columns; the realization is centerless, so the
    residual must vanish there exactly.
    """
    if n < -1 or m < -1:
        raise ValueError("bracket checks need n, m >= -1")
    if guard is None:
        guard = GuardSpec(word_length=2, max_shift=max(n, m, 1))
    alpha, beta, gamma = bracket_weights(n, m, osc.mode)
    Ln, Lm = make_L(n, osc), make_L(m, osc)
    res = deformed_commutator(Ln, Lm, alpha, beta)
    if not gamma.is_zero():
        res = res - make_L(m + n, osc) * gamma
    return res.restrict(guard.safe_columns(osc.dim))


def word_image(word, osc):
    """Matrix image of a word of letters from the rewriting layer.

    Letters are the plain tuples used there: ("L", n) maps to L_n and
    ("C", 0) to the zero matrix (the realization is centerless).
    T has no Fock image, so words containing it are rejected.
    """
    out = FockOperator.identity(osc.dim)
    for sym, n in word:
        if sym == "T":
            raise ValueError("T has no Fock image")
        if sym == "C":
            return FockOperator.zero(osc.dim)
        out = out * make_L(n, osc)
    return out


def element_image(x, osc):
    """Matrix image of a linear combination of words, term by term."""
    out = FockOperator.zero(osc.dim)
    for word, coeff in x.terms.items():
        out = out + word_image(word, osc).scale(coeff)
    return out


def power_weights(n, mode):
    """Coefficients (alpha, beta, gamma) with alpha a (a+)^n - beta (a+)^n a = gamma (a+)^(n-1)."""
    if mode == "classical":
        return ONE, ONE, RatFunc.from_int(n)
    if mode == "one_param":
        return ONE, Q ** n, q_int(n)
    if mode == "two_param":
        return P ** n, Q ** n, pq_int(n)
    raise ValueError(f"unknown mode {mode!r}")


def verify_power_commutator(n, osc, guard=None):
    """Residual of the ladder identity for a against the n-th power of a+."""
    if not isinstance(n, int) or n < 1:
        raise ValueError("power commutator checks need n >= 1")
    if guard is None:
        guard = GuardSpec(word_length=n + 1, max_shift=1)
    alpha, beta, gamma = power_weights(n, osc.mode)
    ap_n = osc.a_plus ** n
    res = deformed_commutator(osc.a, ap_n, alpha, beta) - (osc.a_plus ** (n - 1)) * gamma
    return res.restrict(guard.safe_columns(osc.dim))
