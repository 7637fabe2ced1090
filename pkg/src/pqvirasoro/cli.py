"""Command-line front end.

Verbs:
    normalize EXPR      rewrite an expression to its normal form
    bracket N M         the bracket environment element B(n, m)
    verify              run a verification suite, one JSON record per line
    table               export structure constants or the Hopf generator maps
    fock                dump truncated oscillator matrices and residuals

Expressions use the letters T, Tinv, C, L(n), integer and p,q rational
coefficients, with juxtaposition or * for products, ^ for powers, and
parentheses. Negative powers are only meaningful on T and on scalar
coefficients.

Verification records are JSON lines with a stable field order; the
process exits 0 when every gated record is ok, 1 when some gated
residual is nonzero, and 2 on usage errors. Variant modes (the printed
coproduct of C, the alternative C-commutation form) are reported but
excluded from gating unless requested.
"""

import argparse
import json
import sys

from .field import RatFunc, ZERO, ONE, P, Q, monomial
from .freealg import (
    AlgebraElement,
    DEFAULT_CONFIG,
    RewriteConfig,
    L,
    T,
    TINV,
    C,
    basis_decompose,
    bracket_env,
    make_rng,
    normalize,
    random_word,
    relation_elements,
    RELATION_NAMES,
    t_word,
    to_json_dict,
    word_str,
)
from . import homlie
from . import hopf as hopfmod
from . import oscillator as osc


class ExpressionError(ValueError):
    def __init__(self, message, pos):
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos


_SYMBOLS = set("+-*/^()")


def _tokenize(src):
    tokens = []
    i = 0
    n = len(src)
    while i < n:
        ch = src[i]
        if ch.isspace():
            i += 1
            continue
        if ch in _SYMBOLS:
            tokens.append((ch, ch, i))
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and src[j].isdigit():
                j += 1
            tokens.append(("int", int(src[i:j]), i))
            i = j
            continue
        if ch.isalpha():
            j = i
            while j < n and src[j].isalnum():
                j += 1
            tokens.append(("name", src[i:j], i))
            i = j
            continue
        raise ExpressionError(f"unexpected character {ch!r}", i)
    tokens.append(("end", None, n))
    return tokens


def _scalar(coeff):
    return AlgebraElement({(): coeff})


def _as_scalar(x):
    """The coefficient if x is a pure scalar element, else None."""
    if not x.terms:
        return ZERO
    if len(x.terms) == 1 and () in x.terms:
        return x.terms[()]
    return None


class _Parser:
    def __init__(self, src):
        self.src = src
        self.tokens = _tokenize(src)
        self.k = 0

    def peek(self):
        return self.tokens[self.k]

    def next(self):
        tok = self.tokens[self.k]
        self.k += 1
        return tok

    def expect(self, kind):
        tok = self.next()
        if tok[0] != kind:
            raise ExpressionError(f"expected {kind!r}, found {tok[1]!r}", tok[2])
        return tok

    def parse(self):
        value = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise ExpressionError(f"unexpected {tok[1]!r}", tok[2])
        return value

    def expr(self):
        kind, _, _ = self.peek()
        negate = False
        if kind in ("+", "-"):
            negate = self.next()[0] == "-"
        value = self.term()
        if negate:
            value = -value
        while True:
            kind, _, _ = self.peek()
            if kind == "+":
                self.next()
                value = value + self.term()
            elif kind == "-":
                self.next()
                value = value - self.term()
            else:
                return value

    def term(self):
        value = self.factor()
        while True:
            kind, _, pos = self.peek()
            if kind == "*":
                self.next()
                value = value * self.factor()
            elif kind == "/":
                self.next()
                rhs = self.factor()
                s = _as_scalar(rhs)
                if s is None:
                    raise ExpressionError("can only divide by a scalar coefficient", pos)
                if s.is_zero():
                    raise ExpressionError("division by zero", pos)
                value = value * s.inverse()
            elif kind in ("int", "name", "("):
                value = value * self.factor()
            else:
                return value

    def factor(self):
        value = self.atom()
        while self.peek()[0] == "^":
            self.next()
            value = self._power(value)
        return value

    def _signed_int(self):
        kind, _, pos = self.peek()
        sign = 1
        if kind in ("+", "-"):
            sign = -1 if self.next()[0] == "-" else 1
        tok = self.next()
        if tok[0] != "int":
            raise ExpressionError("exponent must be an integer", tok[2])
        return sign * tok[1]

    def _power(self, value):
        kind, _, pos = self.peek()
        k = self._signed_int()
        s = _as_scalar(value)
        if s is not None:
            return _scalar(s ** k)
        if len(value.terms) == 1:
            word, coeff = next(iter(value.terms.items()))
            if k >= 0:
                return AlgebraElement({word * k: coeff ** k})
            if all(sym == "T" for sym, _ in word):
                degree = sum(d for _, d in word)
                return AlgebraElement({t_word(degree * k): coeff ** k})
            if any(sym == "C" for sym, _ in word):
                raise ExpressionError("exponent on C must be nonnegative", pos)
            raise ExpressionError("negative exponent requires an invertible factor", pos)
        if k >= 0:
            out = AlgebraElement.unit()
            for _ in range(k):
                out = out * value
            return out
        raise ExpressionError("negative exponent requires an invertible factor", pos)

    def atom(self):
        kind, val, pos = self.next()
        if kind == "int":
            return _scalar(RatFunc.from_int(val))
        if kind == "(":
            value = self.expr()
            self.expect(")")
            return value
        if kind == "name":
            if val == "p":
                return _scalar(P)
            if val == "q":
                return _scalar(Q)
            if val == "T":
                return AlgebraElement.from_word((T,))
            if val == "Tinv":
                return AlgebraElement.from_word((TINV,))
            if val == "C":
                return AlgebraElement.from_word((C,))
            if val == "L":
                self.expect("(")
                n = self._signed_int()
                self.expect(")")
                return AlgebraElement.from_word((L(n),))
            raise ExpressionError(f"unknown symbol {val!r}", pos)
        raise ExpressionError(f"unexpected {val!r}", pos)


def parse_expression(src):
    """Parse a textual expression into an (unnormalized) AlgebraElement."""
    return _Parser(src).parse()


def render_element(x):
    return str(x)


def _word_latex(word):
    if not word:
        return "1"
    runs = []
    for letter in word:
        if runs and runs[-1][0] == letter:
            runs[-1][1] += 1
        else:
            runs.append([letter, 1])
    parts = []
    for (sym, n), count in runs:
        if sym == "T":
            exp = n * count
            parts.append("\\mathcal{T}" if exp == 1 else f"\\mathcal{{T}}^{{{exp}}}")
        elif sym == "C":
            parts.append("C" if count == 1 else f"C^{{{count}}}")
        else:
            base = f"L_{{{n}}}"
            parts.append(base if count == 1 else f"{base}^{{{count}}}")
    return " ".join(parts)


def element_latex(x):
    if x.is_zero():
        return "0"
    pieces = []
    for word, coeff in x.sorted_terms():
        cstr = coeff.latex()
        body = _word_latex(word)
        sign = "+"
        if cstr.startswith("-"):
            sign = "-"
            cstr = cstr[1:]
        if cstr == "1" and word:
            term = body
        elif not word:
            term = cstr
        else:
            term = f"{cstr}\\, {body}"
        if not pieces:
            pieces.append(term if sign == "+" else "-" + term)
        else:
            pieces.append(f" {sign} {term}")
    return "".join(pieces)


def _emit(lines, out_path):
    text = "\n".join(lines) + "\n"
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _record(**fields):
    return json.dumps(fields)


def _residual_field(res):
    return str(res)


def _variant_names(args):
    names = []
    if getattr(args, "variant", None):
        names.append(args.variant)
    if getattr(args, "strict_typos", False):
        names.append("strict-typos")
    return names


def _rewrite_config(args):
    if getattr(args, "variant", None) == "r5-8.11":
        return RewriteConfig(r5_variant="eq811")
    return DEFAULT_CONFIG


def _hopf_config(args):
    return hopfmod.HopfConfig(
        delta_c="printed" if getattr(args, "strict_typos", False) else "corrected",
        rewrite=_rewrite_config(args),
    )


class _Report:
    """Collects records and tracks the gated pass/fail outcome."""

    def __init__(self, gate_variants=False, variants=()):
        self.lines = []
        self.failed = False
        self.gate_variants = gate_variants
        self.variants = list(variants)

    def add(self, suite, check, ok, residual=None, **params):
        gated = not self.variants or self.gate_variants
        fields = {"suite": suite, "check": check}
        fields.update(params)
        if self.variants:
            fields["variants"] = self.variants
        fields["status"] = "ok" if ok else "fail"
        fields["gated"] = gated
        if not ok and residual is not None:
            fields["residual"] = _residual_field(residual)
        self.lines.append(json.dumps(fields))
        if not ok and gated:
            self.failed = True


def _suite_fock(report, window, dim):
    for mode in ("one_param", "two_param"):
        o = osc.make_oscillator(dim, mode)
        for n in range(1, min(6, dim - 2) + 1):
            res = osc.verify_power_commutator(n, o)
            report.add("fock", "power_commutator", res.is_zero(), res, mode=mode, n=n, dim=dim)
        top = min(window, dim // 3)
        for n in range(-1, top + 1):
            for m in range(-1, top + 1):
                res = osc.verify_bracket(n, m, o)
                report.add("fock", "bracket", res.is_zero(), res, mode=mode, n=n, m=m, dim=dim)
    for mode in osc.MODES:
        ok = all(
            osc.lowering_coeff(k, mode) == osc.lowering_coeff_iterative(k, mode)
            for k in range(31)
        )
        report.add("fock", "lowering_oracle", ok, mode=mode, k_max=30)


def _suite_homlie(report, window):
    for n in range(-window, window + 1):
        for m in range(-window, window + 1):
            res = homlie.skew_residual(n, m)
            report.add("homlie", "skew", res.is_zero(), res, n=n, m=m)
    jwin = min(window, 5)
    bad = []
    for n in range(-jwin, jwin + 1):
        for m in range(-jwin, jwin + 1):
            for k in range(-jwin, jwin + 1):
                res = homlie.hom_jacobi_residual(n, m, k)
                if not res.is_zero():
                    bad.append((n, m, k, str(res)))
    report.add(
        "homlie", "hom_jacobi", not bad,
        residual="; ".join(f"{t[:3]}: {t[3]}" for t in bad[:3]) if bad else None,
        window=jwin, triples=(2 * jwin + 1) ** 3,
    )
    for n in range(1, 11):
        ok = homlie.central_g(-n) == -homlie.central_g(n)
        report.add("homlie", "central_reflection", ok, n=n)
    gap = homlie.alpha_bracket_gap(1, 2)
    report.add(
        "homlie", "twist_not_bracket_map", not gap.is_zero(),
        residual="unexpectedly multiplicative" if gap.is_zero() else None,
        n=1, m=2, gap=str(gap),
    )


def _suite_hopf(report, window, cfg):
    gens = hopfmod.generators(window)
    for name, g in gens:
        res = hopfmod.check_coassoc(g, cfg)
        report.add("hopf", "coassoc", res.is_zero(), res, x=name)
        r1, r2 = hopfmod.check_counit(g, cfg)
        report.add("hopf", "counit", r1.is_zero() and r2.is_zero(),
                   r1 if not r1.is_zero() else r2, x=name)
        a1, a2 = hopfmod.check_antipode(g, cfg)
        report.add("hopf", "antipode", a1.is_zero() and a2.is_zero(),
                   a1 if not a1.is_zero() else a2, x=name)
        res = hopfmod.cocommutativity_residual(g, cfg)
        report.add("hopf", "cocommutative", res.is_zero(), res, x=name)
    for name1, g1 in gens:
        for name2, g2 in gens:
            x = g1 * g2
            label = f"{name1}*{name2}"
            res = hopfmod.check_coassoc(x, cfg)
            report.add("hopf", "coassoc", res.is_zero(), res, x=label)
            r1, r2 = hopfmod.check_counit(x, cfg)
            report.add("hopf", "counit", r1.is_zero() and r2.is_zero(),
                       r1 if not r1.is_zero() else r2, x=label)
            a1, a2 = hopfmod.check_antipode(x, cfg)
            report.add("hopf", "antipode", a1.is_zero() and a2.is_zero(),
                       a1 if not a1.is_zero() else a2, x=label)
    for mapname in ("delta", "antipode", "counit"):
        for rel in RELATION_NAMES:
            for n in range(-window, window + 1):
                for m in range(-window, window + 1):
                    residuals = hopfmod.check_relation_preservation(mapname, rel, n, m, cfg)
                    bad = [r for r in residuals if not r.is_zero()]
                    report.add(
                        "hopf", f"{mapname}_preserves_{rel}", not bad,
                        bad[0] if bad else None, n=n, m=m,
                    )
    for name, g in gens:
        res = hopfmod.antipode_squared(g, cfg)
        report.add("hopf", "antipode_squared", res.is_zero(), res, x=name)


def _suite_confluence(report, seed, count, cfg):
    rng = make_rng(seed)
    mismatches = 0
    for idx in range(count):
        word = random_word(rng, max_len=12, index_range=(-6, 6))
        x = AlgebraElement.from_word(word)
        a = normalize(x, cfg, strategy="leftmost")
        b = normalize(x, cfg, strategy="rightmost")
        if a != b:
            mismatches += 1
            if mismatches <= 5:
                report.add(
                    "confluence", "strategy_agreement", False,
                    a - b, word=word_str(word), seed=seed, index=idx,
                )
    report.add(
        "confluence", "summary", mismatches == 0,
        None if mismatches == 0 else f"{mismatches}/{count} words disagree",
        seed=seed, words=count, mismatches=mismatches,
    )


def _cmd_verify(args):
    variants = _variant_names(args)
    report = _Report(gate_variants=args.gate_variants, variants=variants)
    cfg = _hopf_config(args)
    suites = [args.suite] if args.suite != "all" else ["fock", "homlie", "hopf", "confluence"]
    for suite in suites:
        if suite == "fock":
            _suite_fock(report, args.range, args.dim)
        elif suite == "homlie":
            _suite_homlie(report, args.range)
        elif suite == "hopf":
            _suite_hopf(report, args.range, cfg)
        elif suite == "confluence":
            _suite_confluence(report, args.seed, args.words, cfg.rewrite)
    _emit(report.lines, args.out)
    return 1 if report.failed else 0


def _structure_constants_lines(window, fmt):
    records = homlie.structure_constant_records(window)
    if fmt == "json":
        return [json.dumps(r) for r in records]
    lines = ["\\begin{align*}"]
    for r in records:
        lhs = f"\\big[L_{{{r['n']}}},L_{{{r['m']}}}\\big]"
        coeff_l = homlie._u(r["m"]) - homlie._u(r["n"])
        terms = []
        if not coeff_l.is_zero():
            terms.append(f"\\left({coeff_l.latex()}\\right)L_{{{r['n'] + r['m']}}}")
        if r["coeff_C"] != "0":
            cc = homlie.central_g(r["n"])
            terms.append(f"\\left({cc.latex()}\\right)C")
        rhs = " + ".join(terms) if terms else "0"
        lines.append(f"  {lhs} &= {rhs} \\\\")
    lines.append("\\end{align*}")
    return lines


def _tensor_latex(t):
    if t.is_zero():
        return "0"
    pieces = []
    for slots, coeff in t.sorted_terms():
        body = " \\otimes ".join(_word_latex(w) for w in slots)
        cstr = coeff.latex()
        sign = "+"
        if cstr.startswith("-"):
            sign = "-"
            cstr = cstr[1:]
        term = body if cstr == "1" else f"{cstr}\\, {body}"
        if not pieces:
            pieces.append(term if sign == "+" else "-" + term)
        else:
            pieces.append(f" {sign} {term}")
    return "".join(pieces)


def _hopf_maps_lines(window, fmt, cfg):
    gens = hopfmod.generators(window)
    rows = []
    for name, g in gens:
        rows.append(
            {
                "generator": name,
                "delta": str(hopfmod.coproduct(g, cfg)),
                "counit": str(hopfmod.counit(g)),
                "antipode": str(hopfmod.antipode(g, cfg)),
            }
        )
    if fmt == "json":
        return [json.dumps(r) for r in rows]
    lines = ["\\begin{align*}"]
    for name, g in gens:
        gl = element_latex(normalize(g, cfg.rewrite))
        lines.append(f"  \\Delta({gl}) &= {_tensor_latex(hopfmod.coproduct(g, cfg))} \\\\")
        lines.append(f"  \\epsilon({gl}) &= {hopfmod.counit(g).latex()} \\\\")
        lines.append(f"  S({gl}) &= {element_latex(hopfmod.antipode(g, cfg))} \\\\")
    lines.append("\\end{align*}")
    return lines


def _cmd_table(args):
    cfg = _hopf_config(args)
    if args.kind == "structure_constants":
        lines = _structure_constants_lines(args.range, args.format)
    else:
        lines = _hopf_maps_lines(args.range, args.format, cfg)
    _emit(lines, args.out)
    return 0


def _cmd_normalize(args):
    x = parse_expression(args.expr)
    cfg = _rewrite_config(args)
    nf = normalize(x, cfg)
    if args.format == "json":
        payload = {
            "input": args.expr,
            "normal_form": render_element(nf),
            "terms": to_json_dict(nf),
        }
        _emit([json.dumps(payload)], args.out)
    elif args.format == "latex":
        _emit([element_latex(nf)], args.out)
    else:
        _emit([render_element(nf)], args.out)
    return 0


def _cmd_bracket(args):
    elem = bracket_env(args.n, args.m)
    if args.format == "json":
        payload = {
            "n": args.n,
            "m": args.m,
            "element": render_element(elem),
            "terms": to_json_dict(elem),
        }
        _emit([json.dumps(payload)], args.out)
    elif args.format == "latex":
        _emit([element_latex(elem)], args.out)
    else:
        _emit([render_element(elem)], args.out)
    return 0


def _cmd_fock(args):
    o = osc.make_oscillator(args.dim, args.mode)
    named = [("a", o.a), ("a_plus", o.a_plus)]
    for n in range(-1, min(args.range, args.dim - 2) + 1):
        named.append((f"L({n})", osc.make_L(n, o)))
    if args.format == "csv":
        lines = ["operator,row,col,entry"]
        for name, op in named:
            for (i, j) in sorted(op.entries):
                lines.append(f"{name},{i},{j},{op.entries[(i, j)]}")
    else:
        lines = []
        for name, op in named:
            entries = {f"{i},{j}": str(op.entries[(i, j)]) for (i, j) in sorted(op.entries)}
            lines.append(json.dumps({"operator": name, "dim": o.dim, "mode": o.mode, "entries": entries}))
    _emit(lines, args.out)
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="pqvirasoro",
        description="symbolic toolkit for the two-parameter deformed Virasoro algebra",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    def common(p, fmt_choices=("text", "json", "latex")):
        p.add_argument("--format", choices=fmt_choices, default=fmt_choices[0])
        p.add_argument("--out", default=None, help="write output to a file instead of stdout")
        p.add_argument("--variant", choices=["r5-8.11"], default=None,
                       help="use the alternative form of the C commutation relation")

    p = sub.add_parser("normalize", help="rewrite an expression to normal form")
    p.add_argument("expr")
    common(p)
    p.set_defaults(fn=_cmd_normalize)

    p = sub.add_parser("bracket", help="bracket environment element B(n, m)")
    p.add_argument("n", type=int)
    p.add_argument("m", type=int)
    common(p)
    p.set_defaults(fn=_cmd_bracket)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", choices=["fock", "homlie", "hopf", "confluence", "all"],
                   default="all")
    p.add_argument("--range", type=int, default=6, help="index window half-width")
    p.add_argument("--dim", type=int, default=20, help="Fock truncation dimension")
    p.add_argument("--seed", type=int, default=0, help="seed for random words")
    p.add_argument("--words", type=int, default=500, help="random words for the confluence suite")
    p.add_argument("--variant", choices=["r5-8.11"], default=None)
    p.add_argument("--strict-typos", action="store_true",
                   help="use the printed form of the coproduct of C")
    p.add_argument("--gate-variants", action="store_true",
                   help="let variant-mode records affect the exit status")
    p.add_argument("--out", default=None)
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("table", help="export structure constants or Hopf maps")
    p.add_argument("--kind", choices=["structure_constants", "hopf_maps"],
                   default="structure_constants")
    p.add_argument("--range", type=int, default=3)
    common(p, fmt_choices=("json", "latex"))
    p.add_argument("--strict-typos", action="store_true")
    p.set_defaults(fn=_cmd_table)

    p = sub.add_parser("fock", help="dump truncated oscillator matrices")
    p.add_argument("--dim", type=int, default=8)
    p.add_argument("--range", type=int, default=3)
    p.add_argument("--mode", choices=list(osc.MODES), default="two_param")
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.add_argument("--out", default=None)
    p.set_defaults(fn=_cmd_fock)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except ExpressionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
