"""Command line front end: polynomial parser, dispatch and JSON output."""

import argparse
import contextlib
import json
import re
import sys

from gmpy2 import mpq

from . import __version__
from .poly import UPoly, BPoly, Q, Rat
from .families import Family
from .zeros import Box, critical_point_exists
from .levelsets import decide_connected
from .subres import subresultant
from .classify import classify_degree4, Sqrt
from .hrc import refute_pair, truncated_integral, tau, divergence_verdict
from .positivity import bruna_witnesses, bruna_poly, hankel, det_exact, leading_minors

__all__ = ["ParseError", "parse_poly", "run", "main"]


class ParseError(ValueError):
    def __init__(self, msg, column):
        super().__init__(f"{msg} at column {column}")
        self.column = column


# ---------------------------------------------------------------- parser

_TOKEN = re.compile(r"\s*(?:(\d+)|([xy])|(.))")


def _tokenize(text):
    toks = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m.end() == pos or m.group(0).strip() == "":
            break
        col = m.start(m.lastindex) + 1
        kind = {1: "int", 2: "var", 3: "op"}[m.lastindex]
        toks.append((kind, m.group(m.lastindex), col))
        pos = m.end()
    toks.append(("end", "", len(text) + 1))
    return toks


class _Parser:
    def __init__(self, text):
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def expect(self, value):
        kind, v, col = self.take()
        if v != value:
            raise ParseError(f"expected {value!r}, found {v or 'end of input'!r}", col)

    def expr(self):
        neg = False
        if self.peek()[1] == "-":
            self.take()
            neg = True
        acc = self.term()
        if neg:
            acc = -acc
        while self.peek()[1] in ("+", "-"):
            op = self.take()[1]
            t = self.term()
            acc = acc + t if op == "+" else acc - t
        return acc

    def term(self):
        acc = self.factor()
        while self.peek()[1] == "*":
            self.take()
            acc = acc * self.factor()
        kind, v, col = self.peek()
        if kind in ("int", "var") or v == "(":
            raise ParseError("implicit multiplication is not allowed", col)
        return acc

    def factor(self):
        base = self.base()
        if self.peek()[1] == "^":
            self.take()
            kind, v, col = self.take()
            if kind != "int":
                raise ParseError("exponent must be a nonnegative integer", col)
            base = base ** int(v)
        return base

    def base(self):
        kind, v, col = self.take()
        if kind == "int":
            num = mpq(int(v))
            if self.peek()[1] == "/":
                self.take()
                k2, d, c2 = self.take()
                if k2 != "int" or int(d) == 0:
                    raise ParseError("denominator must be a positive integer", c2)
                num = mpq(int(v), int(d))
            return BPoly.const(num)
        if kind == "var":
            return BPoly({(1, 0): 1} if v == "x" else {(0, 1): 1})
        if v == "(":
            e = self.expr()
            self.expect(")")
            return e
        raise ParseError(f"unexpected {v or 'end of input'!r}", col)


def parse_poly(text):
    """Parse ``text`` into a BPoly; a leading minus is accepted in any expression."""
    p = _Parser(text)
    out = p.expr()
    kind, v, col = p.peek()
    if kind != "end":
        raise ParseError(f"unexpected {v!r}", col)
    return out


def _parse_rat(text):
    try:
        return Q(text.strip())
    except (ValueError, TypeError, ZeroDivisionError):
        raise ValueError(f"not a rational number: {text!r}") from None


# ---------------------------------------------------------------- JSON

def _js(v):
    if isinstance(v, Rat):
        return str(v)
    if isinstance(v, (BPoly, Sqrt)):
        return str(v)
    if isinstance(v, UPoly):
        return v.to_str("t")
    if isinstance(v, Box):
        return _js(v.as_lists())
    if isinstance(v, Family):
        return v.id
    if isinstance(v, dict):
        return {k: _js(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_js(x) for x in v]
    return v


def _family_payload(fam):
    out = {"family": fam.id}
    if fam.id in (2, 4):
        out["a02"] = str(fam.a02)
    return out


def _upoly_in(u, var):
    return BPoly.from_upoly(u, var).to_str() if u is not None else None


# ---------------------------------------------------------------- commands

def _cmd_classify(a):
    p = parse_poly(a.p)
    v = classify_degree4(p)
    out = {"inputs": {"p": p.to_str()}, "verdict": v.tag}
    if v.tag == "NotSubmersion":
        out["box"] = v.box
    if v.rule:
        out["rule"] = v.rule
    if v.family is not None:
        out.update(_family_payload(v.family))
        out["hrc"] = v.hrc.replace("a02", f"({v.family.a02})") if v.family.id in (2, 4) else v.hrc
        T = v.equivalence.map
        out["equivalence"] = {"map": [T.a, T.b, T.c, T.d, T.e, T.f],
                              "M": v.equivalence.M, "N": v.equivalence.N}
        c = v.certificate
        out["disconnection"] = {"A": c.point_a, "B": c.point_b, "separator": c.separator}
    if v.case:
        out["case"] = v.case
    if v.note:
        out["note"] = v.note
    return out


def _cmd_critical(a):
    p = parse_poly(a.p)
    r = critical_point_exists(p)
    return {"inputs": {"p": p.to_str()}, "exists": r.exists, "box": r.box}


def _cert_payload(c, p):
    other = "x" if c.mainvar == "y" else "y"
    out = {"inputs": {"p": p.to_str()}, "tag": c.tag, "level": c.level}
    if c.tag != "Undetermined":
        out.update({"rule": c.rule, "mainvar": c.mainvar,
                    "A": _upoly_in(c.A, other), "B": _upoly_in(c.B, other),
                    "C": _upoly_in(c.C, other), "disc": _upoly_in(c.disc, other),
                    "facts": list(c.facts)})
    return out


def _cmd_connected(a):
    p = parse_poly(a.p)
    return _cert_payload(decide_connected(p, _parse_rat(a.level)), p)


def _cmd_subres(a):
    p, q = parse_poly(a.p), parse_poly(a.q)
    r = subresultant(p, q, a.var, a.k)
    other = "x" if a.var == "y" else "y"
    return {"inputs": {"p": p.to_str(), "q": q.to_str()}, "var": a.var, "k": a.k,
            "value": _upoly_in(r, other)}


def _family(a):
    a02 = _parse_rat(a.a02) if a.a02 is not None else mpq(0)
    return Family(a.family, a02)


def _cmd_refute(a):
    fam = _family(a)
    q = parse_poly(a.q)
    c = refute_pair(fam, q)
    out = {"inputs": {"q": q.to_str()}, **_family_payload(fam), "tag": c.tag}
    if c.tag == "PointWitness":
        out["point"] = c.point
        out["value"] = c.value
    if c.tau is not None:
        out["tau"] = c.tau
    out["trace"] = list(c.trace)
    return out


def _cmd_bruna(a):
    b = [_parse_rat(s) for s in a.b.split(",")]
    w = bruna_witnesses(b)
    out = {"inputs": {"b": b}, "L": bruna_poly(b).to_str("θ"), "tag": w.tag}
    if w.tag == "Witnesses":
        out["theta1"], out["theta2"] = w.theta1, w.theta2
    return out


def _cmd_hankel(a):
    H = hankel(a.j, a.k)
    out = {"j": a.j, "k": a.k, "matrix": H.rows(), "det": det_exact(H)}
    if a.minors:
        out["minors"] = leading_minors(H)
    return out


def _cmd_hrc_integral(a):
    fam = _family(a)
    h = parse_poly(a.h)
    eps = _parse_rat(a.eps)
    return {"inputs": {"h": h.to_str(), "eps": eps}, **_family_payload(fam),
            "value": truncated_integral(fam, h, eps)}


def _cmd_tau(a):
    fam = _family(a)
    h = parse_poly(a.h)
    out = {"inputs": {"h": h.to_str()}, **_family_payload(fam), "tau": tau(fam, h)}
    try:
        out["divergence"] = divergence_verdict(fam, h).tag
    except ValueError as e:
        out["divergence"] = None
        out["note"] = str(e)
    return out


def _build_parser():
    ap = argparse.ArgumentParser(prog="planarsub", description=__doc__)
    ap.add_argument("--json-pretty", action="store_true", help="indent JSON output")
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="command", required=True)

    s = sub.add_parser("classify", help="classify a polynomial of degree <= 4")
    s.add_argument("p")
    s.set_defaults(fn=_cmd_classify)

    s = sub.add_parser("critical", help="decide whether grad p has a real zero")
    s.add_argument("p")
    s.set_defaults(fn=_cmd_critical)

    s = sub.add_parser("connected", help="certify connected level sets")
    s.add_argument("p")
    s.add_argument("--level", default="0")
    s.set_defaults(fn=_cmd_connected)

    s = sub.add_parser("subres", help="k-th subresultant in a variable")
    s.add_argument("p")
    s.add_argument("q")
    s.add_argument("--var", choices=("x", "y"), required=True)
    s.add_argument("--k", type=int, required=True)
    s.set_defaults(fn=_cmd_subres)

    s = sub.add_parser("refute", help="refute det D(p, q) > 0 for a canonical family p")
    s.add_argument("--family", type=int, choices=(1, 2, 3, 4), required=True)
    s.add_argument("--a02", default=None)
    s.add_argument("q")
    s.set_defaults(fn=_cmd_refute)

    s = sub.add_parser("bruna", help="sign-change witnesses of L(θ) from b0,b1,...")
    s.add_argument("b")
    s.set_defaults(fn=_cmd_bruna)

    s = sub.add_parser("hankel", help="Hankel matrix H_j^k, determinant and minors")
    s.add_argument("j", type=int)
    s.add_argument("k", type=int)
    s.add_argument("--minors", action="store_true")
    s.set_defaults(fn=_cmd_hankel)

    s = sub.add_parser("hrc-integral", help="truncated integral of h over the family region")
    s.add_argument("--family", type=int, choices=(1, 2, 3, 4), required=True)
    s.add_argument("--a02", default=None)
    s.add_argument("h")
    s.add_argument("--eps", required=True)
    s.set_defaults(fn=_cmd_hrc_integral)

    s = sub.add_parser("tau", help="tau exponent of h for a family")
    s.add_argument("--family", type=int, choices=(1, 2, 3, 4), required=True)
    s.add_argument("--a02", default=None)
    s.add_argument("h")
    s.set_defaults(fn=_cmd_tau)
    return ap


def _escape(argv):
    # polynomials such as "-x" or "-1/2" would otherwise be read as options
    return [" " + t if re.match(r"^-[^-]", t) and t != "-h" else t for t in argv]


def run(argv=None, stdout=None, stderr=None):
    """Run one command; returns the exit code."""
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    argv = sys.argv[1:] if argv is None else list(argv)
    # the flag is accepted before or after the subcommand
    pretty = "--json-pretty" in argv
    argv = [t for t in argv if t != "--json-pretty"]
    ap = _build_parser()
    try:
        with contextlib.redirect_stdout(stdout), contextlib.redirect_stderr(stderr):
            a = ap.parse_args(_escape(argv))
    except SystemExit as e:
        return int(e.code or 0)
    try:
        out = a.fn(a)
    except (ValueError, TypeError, ZeroDivisionError) as e:
        print(f"planarsub {a.command}: error: {e}", file=stderr)
        return 2
    doc = {"command": a.command, **out, "version": __version__}
    text = json.dumps(_js(doc), indent=2 if pretty else None, ensure_ascii=False)
    print(text, file=stdout)
    return 0


def main():
    sys.exit(run())
