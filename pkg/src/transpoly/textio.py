"""Text syntax and JSON wire format.

Surintegers use ``w`` for omega::

    w^(w)*2 - w*3 + 5

Polynomials are sums of rationals, powers of ``X``, omega-indexed runs and
recurrence runs::

    X^(w) - 2
    1/2*X^(w - 1)
    sum(n<w, (-1)^n * X^(w - 2*(n+1)))
    sum(n<w, (1 + n) * (3)^n * X^(w*2 - n))
    rec(X^(w - 2), [1/3], [1, 1/3, 1/3])

``^`` binds tighter than ``*``, which binds tighter than ``+``/``-``.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Optional

from transpoly import _upoly as up
from transpoly.errors import ParseError, SchemaError, TranspolyError, UnboundName
from transpoly.exponents import Ordinal, Surinteger
from transpoly.napoly import (
    ZERO,
    NakedPoly,
    RecurrentRun,
    TermFamily,
    family,
    monomial,
    recurrent_run,
)

SCHEMA_VERSION = 1

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*\??)|(.))", re.S)


@dataclass(frozen=True)
class Token:
    kind: str  # "int", "name", "op", "end"
    text: str
    offset: int

    def describe(self) -> str:
        return "end of input" if self.kind == "end" else repr(self.text)


def tokenize(text: str) -> list:
    toks = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            break
        if m.group(1) is not None:
            toks.append(Token("int", m.group(1), m.start(1)))
        elif m.group(2) is not None:
            toks.append(Token("name", m.group(2), m.start(2)))
        elif m.group(3) is not None:
            toks.append(Token("op", m.group(3), m.start(3)))
        pos = m.end()
    toks.append(Token("end", "", len(text)))
    return toks


@dataclass(frozen=True)
class _Lin:
    """Affine value ``const + slope*n`` used while parsing exponents."""

    const: Surinteger
    slope: int = 0

    def is_int(self) -> bool:
        return self.slope == 0 and self.const.is_finite()


class Parser:
    """Recursive-descent parser over a token list.

    ``env`` maps identifiers to polynomials (REPL bindings).
    """

    KEYWORDS = {"w", "X", "n", "sum", "rec"}

    def __init__(self, text: str, env: Optional[Mapping[str, NakedPoly]] = None):
        self.text = text
        self.toks = tokenize(text)
        self.i = 0
        self.env = env or {}

    # -- token helpers --------------------------------------------------------
    @property
    def tok(self) -> Token:
        return self.toks[self.i]

    def at(self, text: str) -> bool:
        t = self.tok
        return t.kind in ("op", "name") and t.text == text

    def advance(self) -> Token:
        t = self.tok
        if t.kind != "end":
            self.i += 1
        return t

    def fail(self, expected: str):
        t = self.tok
        raise ParseError(t.offset, max(len(t.text), 1) if t.kind != "end" else 0, expected, t.describe())

    def expect(self, text: str) -> Token:
        if not self.at(text):
            self.fail(repr(text))
        return self.advance()

    def expect_int(self) -> int:
        if self.tok.kind != "int":
            self.fail("an integer")
        return int(self.advance().text)

    def at_end(self) -> bool:
        return self.tok.kind == "end"

    def finish(self):
        if not self.at_end():
            self.fail("end of input")

    @property
    def offset(self) -> int:
        return self.tok.offset

    # -- exponents ------------------------------------------------------------
    def affine(self, allow_n: bool) -> _Lin:
        neg = False
        if self.at("-"):
            self.advance()
            neg = True
        val = self._aterm(allow_n)
        if neg:
            val = _Lin(-val.const, -val.slope)
        while self.at("+") or self.at("-"):
            sign = 1 if self.advance().text == "+" else -1
            t = self._aterm(allow_n)
            val = _Lin(val.const + t.const * sign, val.slope + sign * t.slope)
        return val

    def _aterm(self, allow_n: bool) -> _Lin:
        val = self._afactor(allow_n)
        while self.at("*"):
            start = self.advance()
            rhs = self._afactor(allow_n)
            if val.is_int():
                k = val.const.finite_part
                val = _Lin(rhs.const * k, rhs.slope * k)
            elif rhs.is_int():
                k = rhs.const.finite_part
                val = _Lin(val.const * k, val.slope * k)
            else:
                raise ParseError(start.offset, 1, "an integer factor", "a product of non-integers")
        return val

    def _afactor(self, allow_n: bool) -> _Lin:
        t = self.tok
        if t.kind == "int":
            self.advance()
            return _Lin(Surinteger.of(int(t.text)))
        if self.at("w"):
            self.advance()
            e = Ordinal.of(1)
            if self.at("^"):
                self.advance()
                e = self._ordinal_atom()
            return _Lin(Surinteger.of(Ordinal.omega_power(e)))
        if allow_n and self.at("n"):
            self.advance()
            return _Lin(Surinteger(), 1)
        if self.at("("):
            self.advance()
            v = self.affine(allow_n)
            self.expect(")")
            return v
        self.fail("an integer, 'w'" + (", 'n'" if allow_n else "") + " or '('")

    def _ordinal_atom(self) -> Ordinal:
        t = self.tok
        if t.kind == "int":
            self.advance()
            return Ordinal.of(int(t.text))
        if self.at("w"):
            self.advance()
            return Ordinal.omega_power(1)
        if self.at("("):
            self.advance()
            start = self.tok
            v = self.affine(False)
            if any(c < 0 for _, c in v.const.terms):
                raise ParseError(start.offset, self.tok.offset - start.offset, "an ordinal", "a negative coefficient")
            self.expect(")")
            return v.const.to_ordinal()
        self.fail("an ordinal exponent")

    def surint(self) -> Surinteger:
        return self.affine(False).const

    # -- rationals and n-polynomials ------------------------------------------
    def rational(self) -> Fraction:
        neg = False
        if self.at("-"):
            self.advance()
            neg = True
        num = self.expect_int()
        val = Fraction(num)
        if self.at("/"):
            self.advance()
            start = self.tok
            den = self.expect_int()
            if den == 0:
                raise ParseError(start.offset, len(start.text), "a nonzero denominator", "0")
            val = Fraction(num, den)
        return -val if neg else val

    def npoly(self) -> tuple:
        neg = False
        if self.at("-"):
            self.advance()
            neg = True
        val = self._nterm()
        if neg:
            val = up.neg(val)
        while self.at("+") or self.at("-"):
            op = self.advance().text
            t = self._nterm()
            val = up.add(val, t) if op == "+" else up.sub(val, t)
        return val

    def _nterm(self) -> tuple:
        val = self._nfactor()
        while self.at("*") or (self.at("/") and self.toks[self.i + 1].kind == "int"):
            if self.advance().text == "/":
                start = self.tok
                d = self.expect_int()
                if d == 0:
                    raise ParseError(start.offset, 1, "a nonzero denominator", "0")
                val = up.scale(val, Fraction(1, d))
            else:
                val = up.mul(val, self._nfactor())
        return val

    def _nfactor(self) -> tuple:
        t = self.tok
        if t.kind == "int":
            self.advance()
            return up.trim([int(t.text)])
        if self.at("n"):
            self.advance()
            k = 1
            if self.at("^"):
                self.advance()
                k = self.expect_int()
            return up.shift(up.ONE, k)
        if self.at("("):
            self.advance()
            v = self.npoly()
            self.expect(")")
            return v
        self.fail("a coefficient in n")

    # -- polynomials ------------------------------------------------------------
    def poly(self) -> NakedPoly:
        neg = False
        if self.at("-"):
            self.advance()
            neg = True
        val = self._pterm()
        if neg:
            val = -val
        while self.at("+") or self.at("-"):
            op = self.advance().text
            t = self._pterm()
            val = val + t if op == "+" else val - t
        return val

    def _pterm(self) -> NakedPoly:
        val = self._pfactor()
        while self.at("*"):
            self.advance()
            val = val * self._pfactor()
        return val

    def _pfactor(self) -> NakedPoly:
        t = self.tok
        if t.kind == "int":
            return monomial(self.rational(), 0)
        if self.at("X"):
            self.advance()
            e = Surinteger.of(1)
            if self.at("^"):
                self.advance()
                e = self._poly_exponent()
            return monomial(1, e)
        if self.at("sum"):
            return self._sum()
        if self.at("rec"):
            return self._rec()
        if self.at("("):
            self.advance()
            v = self.poly()
            self.expect(")")
            return v
        if t.kind == "name" and t.text not in self.KEYWORDS:
            if t.text in self.env:
                self.advance()
                return self.env[t.text]
            raise UnboundName(t.offset, t.text)
        self.fail("a rational, 'X', 'sum', 'rec', a name or '('")

    def _poly_exponent(self) -> Surinteger:
        start = self.tok
        if start.kind == "int":
            self.advance()
            return Surinteger.of(int(start.text))
        if self.at("w"):
            self.advance()
            return Surinteger.of(Ordinal.omega_power(1))
        self.expect("(")
        e = self.surint()
        self.expect(")")
        if e.sign() < 0:
            raise ParseError(start.offset, self.toks[self.i - 1].offset + 1 - start.offset,
                             "a nonnegative exponent", str(e))
        return e

    def _sum(self) -> NakedPoly:
        start = self.advance()
        self.expect("(")
        self.expect("n")
        self.expect("<")
        if self.at("w"):
            self.advance()
            length = None
        else:
            tok = self.tok
            length = self.expect_int()
            if length < 1:
                raise ParseError(tok.offset, len(tok.text), "a positive length", tok.text)
        self.expect(",")
        neg = False
        if self.at("-"):
            self.advance()
            neg = True
        P = up.ONE
        ratio = Fraction(1)
        expo: Optional[_Lin] = None
        expo_tok = None
        while True:
            if self.at("X"):
                if expo is not None:
                    self.fail("a single power of X")
                expo_tok = self.advance()
                if self.at("^"):
                    self.advance()
                    self.expect("(")
                    expo = self.affine(True)
                    self.expect(")")
                else:
                    expo = _Lin(Surinteger.of(1))
            elif self.at("("):
                self.advance()
                v = self.npoly()
                self.expect(")")
                if self.at("^"):
                    self.advance()
                    self.expect("n")
                    if len(v) > 1 or not v:
                        raise ParseError(self.toks[self.i - 1].offset, 1, "a constant ratio", "a polynomial")
                    ratio *= v[0]
                else:
                    P = up.mul(P, v)
            elif self.tok.kind == "int":
                c = self.rational()
                if self.at("^"):
                    self.advance()
                    self.expect("n")
                    ratio *= c
                else:
                    P = up.scale(P, c)
            elif self.at("n"):
                P = up.mul(P, self._nfactor())
            else:
                self.fail("a factor of the summand")
            if not self.at("*"):
                break
            self.advance()
        self.expect(")")
        if expo is None:
            raise ParseError(start.offset, self.toks[self.i - 1].offset + 1 - start.offset,
                             "a power of X in the summand", "none")
        if expo.slope >= 0:
            raise ParseError(expo_tok.offset, 1, "an exponent decreasing in n", "a non-decreasing exponent")
        if neg:
            P = up.neg(P)
        return family(P, ratio, expo.const, -expo.slope, length)

    def _rec(self) -> NakedPoly:
        self.advance()
        self.expect("(")
        self.expect("X")
        e = Surinteger.of(1)
        if self.at("^"):
            self.advance()
            e = self._poly_exponent()
        self.expect(",")
        num = self._rat_list()
        self.expect(",")
        tok = self.tok
        den = self._rat_list()
        self.expect(")")
        if not den or den[0] == 0:
            raise ParseError(tok.offset, 1, "a denominator with nonzero constant term", "zero")
        return recurrent_run(e, num, den)

    def _rat_list(self) -> list:
        self.expect("[")
        out = []
        if not self.at("]"):
            out.append(self.rational())
            while self.at(","):
                self.advance()
                out.append(self.rational())
        self.expect("]")
        return out


def parse_surint(text: str) -> Surinteger:
    p = Parser(text)
    v = p.surint()
    p.finish()
    return v


def parse_ordinal(text: str) -> Ordinal:
    p = Parser(text)
    tok = p.tok
    v = p.surint()
    p.finish()
    if any(c < 0 for _, c in v.terms):
        raise ParseError(tok.offset, len(text) - tok.offset, "an ordinal", "a negative coefficient")
    return v.to_ordinal()


def parse_poly(text: str, env: Optional[Mapping[str, NakedPoly]] = None) -> NakedPoly:
    p = Parser(text, env)
    v = p.poly()
    p.finish()
    return v


# -- printing -----------------------------------------------------------------------


def print_rational(c: Fraction) -> str:
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _omega_term(e: Ordinal, c: int) -> str:
    if e.is_zero():
        return str(c)
    head = "w" if e == Ordinal.of(1) else f"w^({print_ordinal(e)})"
    return head if c == 1 else f"{head}*{c}"


def print_ordinal(o: Ordinal) -> str:
    if o.is_zero():
        return "0"
    return " + ".join(_omega_term(e, c) for e, c in o.terms)


def print_surint(s: Surinteger) -> str:
    if s.is_zero():
        return "0"
    parts = []
    for i, (e, c) in enumerate(s.terms):
        body = _omega_term(e, abs(c))
        if i == 0:
            parts.append(body if c > 0 else "-" + body)
        else:
            parts.append((" + " if c > 0 else " - ") + body)
    return "".join(parts)


def _print_npoly(P) -> str:
    parts = []
    for k, c in enumerate(P):
        if c == 0:
            continue
        mag = abs(c)
        if k == 0:
            body = print_rational(mag)
        else:
            mono = "n" if k == 1 else f"n^{k}"
            body = mono if mag == 1 else f"{print_rational(mag)}*{mono}"
        if not parts:
            parts.append(body if c > 0 else "-" + body)
        else:
            parts.append((" + " if c > 0 else " - ") + body)
    return "".join(parts)


def _print_affine(e: Surinteger, d: int) -> str:
    base, c = e.base, e.finite_part
    if c % d:
        return f"{print_surint(e)} - {d}*n" if d != 1 else f"{print_surint(e)} - n"
    k = -c // d
    coef = "" if d == 1 else f"{d}*"
    if k == 0:
        inner = "n"
        return f"{print_surint(base)} - {coef}{inner}"
    inner = f"(n+{k})" if k > 0 else f"(n-{-k})"
    return f"{print_surint(base)} - {coef}{inner}"


def _print_x(e: Surinteger) -> str:
    return "X" if e == 1 else f"X^({print_surint(e)})"


def _print_family(f: TermFamily) -> str:
    factors = []
    lead = ""
    P = f.coeff_poly
    if len(P) == 1:
        if P[0] == -1:
            lead = "-"
        elif P[0] != 1:
            factors.append(print_rational(P[0]))
    else:
        factors.append(f"({_print_npoly(P)})")
    if f.ratio != 1:
        factors.append(f"({print_rational(f.ratio)})^n")
    factors.append(f"X^({_print_affine(f.start_exp, f.step)})")
    length = "w" if f.length is None else str(f.length)
    return f"sum(n<{length}, {lead}{' * '.join(factors)})"


def _print_rec(r: RecurrentRun) -> str:
    num = ", ".join(print_rational(c) for c in r.numerator)
    den = ", ".join(print_rational(c) for c in r.denominator)
    return f"rec({_print_x(r.start_exp)}, [{num}], [{den}])"


def _is_monomial(item) -> bool:
    return isinstance(item, TermFamily) and item.length == 1


def print_poly(p: NakedPoly) -> str:
    if p.is_zero():
        return "0"
    out = []
    for item in p.families:
        if _is_monomial(item):
            c = item.coeff_poly[0]
            e = item.start_exp
            mag = abs(c)
            if e.is_zero():
                body = print_rational(mag)
            elif mag == 1:
                body = _print_x(e)
            else:
                body = f"{print_rational(mag)}*{_print_x(e)}"
            neg = c < 0
        elif isinstance(item, TermFamily):
            body, neg = _print_family(item), False
        else:
            body, neg = _print_rec(item), False
        if not out:
            out.append("-" + body if neg else body)
        else:
            out.append((" - " if neg else " + ") + body)
    return "".join(out)


def is_geometric(p: NakedPoly) -> bool:
    """True when every run is c * r^n shaped (text output is preferred)."""
    return all(
        isinstance(f, TermFamily) and len(f.coeff_poly) == 1 for f in p.families
    )


# -- JSON ----------------------------------------------------------------------------

_RAT = re.compile(r"^-?\d+(/\d+)?$")


def _rat_str(c: Fraction) -> str:
    c = Fraction(c)
    return f"{c.numerator}/{c.denominator}"


def poly_to_obj(p: NakedPoly) -> dict:
    fams = []
    for item in p.families:
        if isinstance(item, TermFamily):
            fams.append(
                {
                    "coeffPoly": [_rat_str(c) for c in item.coeff_poly],
                    "ratio": _rat_str(item.ratio),
                    "startExp": print_surint(item.start_exp),
                    "step": item.step,
                    "length": "omega" if item.length is None else item.length,
                }
            )
        else:
            fams.append(
                {
                    "kind": "recurrence",
                    "startExp": print_surint(item.start_exp),
                    "numerator": [_rat_str(c) for c in item.numerator],
                    "denominator": [_rat_str(c) for c in item.denominator],
                }
            )
    return {"families": fams}


def _parse_rat(v, path: str) -> Fraction:
    if not isinstance(v, str) or not _RAT.match(v):
        raise SchemaError(path, f"expected a rational string, got {v!r}")
    num, _, den = v.partition("/")
    if den and int(den) == 0:
        raise SchemaError(path, "zero denominator")
    return Fraction(int(num), int(den or 1))


def _parse_exp(v, path: str) -> Surinteger:
    if not isinstance(v, str):
        raise SchemaError(path, f"expected surinteger text, got {v!r}")
    try:
        return parse_surint(v)
    except ParseError as exc:
        raise SchemaError(path, str(exc)) from None


def poly_from_obj(obj, path: str = "$") -> NakedPoly:
    if not isinstance(obj, dict):
        raise SchemaError(path, "expected an object")
    fams = obj.get("families")
    if not isinstance(fams, list):
        raise SchemaError(f"{path}.families", "expected a list")
    total = ZERO
    for i, f in enumerate(fams):
        fp = f"{path}.families[{i}]"
        if not isinstance(f, dict):
            raise SchemaError(fp, "expected an object")
        kind = f.get("kind", "family")
        try:
            if kind == "recurrence":
                for key in ("startExp", "numerator", "denominator"):
                    if key not in f:
                        raise SchemaError(f"{fp}.{key}", "missing")
                e = _parse_exp(f["startExp"], f"{fp}.startExp")
                lists = []
                for key in ("numerator", "denominator"):
                    if not isinstance(f[key], list):
                        raise SchemaError(f"{fp}.{key}", "expected a list")
                    lists.append([_parse_rat(c, f"{fp}.{key}[{j}]") for j, c in enumerate(f[key])])
                if not lists[1] or lists[1][0] == 0:
                    raise SchemaError(f"{fp}.denominator", "constant term must be nonzero")
                total = total + recurrent_run(e, *lists)
            elif kind == "family":
                for key in ("coeffPoly", "ratio", "startExp", "step", "length"):
                    if key not in f:
                        raise SchemaError(f"{fp}.{key}", "missing")
                if not isinstance(f["coeffPoly"], list):
                    raise SchemaError(f"{fp}.coeffPoly", "expected a list")
                P = [_parse_rat(c, f"{fp}.coeffPoly[{j}]") for j, c in enumerate(f["coeffPoly"])]
                ratio = _parse_rat(f["ratio"], f"{fp}.ratio")
                e = _parse_exp(f["startExp"], f"{fp}.startExp")
                step = f["step"]
                if not isinstance(step, int) or isinstance(step, bool) or step < 1:
                    raise SchemaError(f"{fp}.step", "expected a positive integer")
                length = f["length"]
                if length == "omega":
                    length = None
                elif not isinstance(length, int) or isinstance(length, bool) or length < 1:
                    raise SchemaError(f"{fp}.length", "expected 'omega' or a positive integer")
                total = total + family(P, ratio, e, step, length)
            else:
                raise SchemaError(f"{fp}.kind", f"unknown kind {kind!r}")
        except SchemaError:
            raise
        except (TranspolyError, ValueError) as exc:
            raise SchemaError(fp, str(exc)) from None
    return total


def dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def to_json(value) -> str:
    """Serialise a NakedPoly or a DivisionTrace."""
    from transpoly.division import DivisionTrace

    if isinstance(value, NakedPoly):
        return dumps({"schemaVersion": SCHEMA_VERSION, **poly_to_obj(value)})
    if isinstance(value, DivisionTrace):
        return dumps({"schemaVersion": SCHEMA_VERSION, **trace_to_obj(value)})
    raise TypeError(f"cannot serialise {type(value).__name__}")


def trace_to_obj(t) -> dict:
    return {
        "quotient": poly_to_obj(t.quotient),
        "remainder": poly_to_obj(t.remainder),
        "steps": [
            {
                "kind": s.kind,
                "quotientIncrement": poly_to_obj(s.quotient_increment),
                "remainderAfter": poly_to_obj(s.remainder_after),
            }
            for s in t.steps
        ],
        "termination": {"limitJumps": t.limit_jumps, "successors": t.successors},
        "exhausted": t.exhausted,
    }


def from_json(text) -> NakedPoly:
    if isinstance(text, (str, bytes)):
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise SchemaError("$", f"invalid JSON: {exc.msg}") from None
    else:
        obj = text
    if isinstance(obj, dict) and "schemaVersion" in obj and obj["schemaVersion"] != SCHEMA_VERSION:
        raise SchemaError("$.schemaVersion", f"unsupported version {obj['schemaVersion']!r}")
    return poly_from_obj(obj)
