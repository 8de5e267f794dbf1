"""Line-oriented REPL and script runner.

Commands (one per line; blank lines and ``#`` comments are skipped)::

    let <name> = <poly>        show <poly>          deg <poly>
    divmod <p> <q>             cmp <p> <q>          supp <p> [k]
    gcd <p> <q>                factor? <p> <a> <b>
    mod set <m> [irreducible]  mod reduce <p>       mod inv <p>     mod clear
    set budget <n>             set output text|json
    quit

Arguments are parsed greedily, so write ``divmod X^(w) (-X)`` rather than
``divmod X^(w) -X`` when the second argument starts with a sign.
"""

from __future__ import annotations

import argparse
import os
import sys
from dataclasses import dataclass, field
from typing import Optional

from transpoly import division, quotient
from transpoly.errors import ParseError, SchemaError, TranspolyError
from transpoly.napoly import NakedPoly
from transpoly.textio import (
    Parser,
    dumps,
    is_geometric,
    poly_to_obj,
    print_ordinal,
    print_poly,
    print_surint,
    to_json,
)

DEFAULT_BUDGET = 256
EXIT_PARSE = 2
EXIT_ENGINE = 3


@dataclass
class Session:
    bindings: dict = field(default_factory=dict)
    modulus: Optional[quotient.Modulus] = None
    budget: int = DEFAULT_BUDGET
    output_mode: str = "text"
    done: bool = False


class _Quit(Exception):
    pass


def _fmt_poly(p: NakedPoly) -> str:
    """Text for geometric runs, the JSON wire form otherwise."""
    if is_geometric(p):
        return print_poly(p)
    return to_json(p)


class _Command:
    def __init__(self, line: str, session: Session):
        self.p = Parser(line, session.bindings)
        self.s = session

    def word(self) -> str:
        t = self.p.tok
        if t.kind != "name":
            self.p.fail("a command")
        return self.p.advance().text

    def poly(self) -> NakedPoly:
        return self.p.poly()

    def end(self):
        self.p.finish()


def _emit(session: Session, text_out: str, json_out) -> str:
    if session.output_mode == "json":
        return json_out if isinstance(json_out, str) else dumps(json_out)
    return text_out


def _poly_out(session: Session, p: NakedPoly) -> str:
    return _emit(session, _fmt_poly(p), to_json(p))


def _division(session: Session, p, q):
    t = division.divmod_trace(p, q, session.budget)
    if t.exhausted:
        raise division.BudgetExhausted(
            f"budget exhausted after {t.successor_steps} steps; "
            f"partial remainder degree {print_surint(t.remainder.degree())}",
            partial=t,
        )
    return t


def execute(line: str, session: Session) -> str:
    """Run one command; raises library errors to the caller."""
    cmd = _Command(line, session)
    if cmd.p.at_end():
        return ""
    name = cmd.word()
    s = session

    if name == "quit":
        cmd.end()
        raise _Quit
    if name == "let":
        tok = cmd.p.tok
        ident = cmd.word()
        if ident in Parser.KEYWORDS:
            raise ParseError(tok.offset, len(ident), "a free identifier", repr(ident))
        cmd.p.expect("=")
        value = cmd.poly()
        cmd.end()
        s.bindings[ident] = value
        return _emit(s, f"{ident} = {_fmt_poly(value)}", to_json(value))
    if name == "show":
        value = cmd.poly()
        cmd.end()
        return _poly_out(s, value)
    if name == "deg":
        value = cmd.poly()
        cmd.end()
        d = print_surint(division.norm(value))
        return _emit(s, d, {"degree": d})
    if name == "supp":
        value = cmd.poly()
        k = 10
        if not cmd.p.at_end():
            k = cmd.p.expect_int()
        cmd.end()
        items = value.support_seq(k + 1)
        exps = [print_surint(e) for e, _ in items[:k]]
        more = len(items) > k
        return _emit(s, ", ".join(exps) + (", ..." if more else ""), {"support": exps, "truncated": more})
    if name == "cmp":
        a, b = cmd.poly(), cmd.poly()
        cmd.end()
        word = a.cmp(b).name.lower()
        return _emit(s, word, {"ordering": word})
    if name == "divmod":
        a, b = cmd.poly(), cmd.poly()
        cmd.end()
        t = _division(s, a, b)
        text = (
            f"quotient: {_fmt_poly(t.quotient)}\n"
            f"remainder: {_fmt_poly(t.remainder)}\n"
            f"termination: {print_ordinal(t.label)}"
        )
        return _emit(s, text, to_json(t))
    if name == "gcd":
        a, b = cmd.poly(), cmd.poly()
        cmd.end()
        g, u, v = division.ext_gcd(a, b, s.budget)
        text = f"gcd: {_fmt_poly(g)}\nu: {_fmt_poly(u)}\nv: {_fmt_poly(v)}"
        return _emit(s, text, {"gcd": poly_to_obj(g), "u": poly_to_obj(u), "v": poly_to_obj(v)})
    if name == "factor?":
        p, a, b = cmd.poly(), cmd.poly(), cmd.poly()
        cmd.end()
        ok = division.verify_factor(p, a, b)
        return _emit(s, "true" if ok else "false", {"factor": ok})
    if name == "mod":
        sub = cmd.word()
        if sub == "set":
            m = cmd.poly()
            irreducible = False
            if cmd.p.at("irreducible"):
                cmd.p.advance()
                irreducible = True
            cmd.end()
            s.modulus = quotient.Modulus(m, irreducible)
            tag = " (irreducible)" if irreducible else ""
            return _emit(s, f"modulus: {_fmt_poly(m)}{tag}", {"modulus": poly_to_obj(m), "irreducible": irreducible})
        if sub == "clear":
            cmd.end()
            s.modulus = None
            return _emit(s, "modulus cleared", {"modulus": None})
        if sub in ("reduce", "inv"):
            value = cmd.poly()
            cmd.end()
            if s.modulus is None:
                raise TranspolyError("no active modulus; use 'mod set' first")
            elem = quotient.reduce(value, s.modulus, s.budget)
            if sub == "inv":
                elem = quotient.q_inv(elem, s.budget)
            return _poly_out(s, elem.rep)
        cmd.p.i -= 1
        cmd.p.fail("'set', 'reduce', 'inv' or 'clear'")
    if name == "set":
        what = cmd.word()
        if what == "budget":
            tok = cmd.p.tok
            n = cmd.p.expect_int()
            cmd.end()
            if n < 1:
                raise ParseError(tok.offset, len(tok.text), "a positive budget", tok.text)
            s.budget = n
            return _emit(s, f"budget: {n}", {"budget": n})
        if what == "output":
            tok = cmd.p.tok
            mode = cmd.word()
            if mode not in ("text", "json"):
                raise ParseError(tok.offset, len(mode), "'text' or 'json'", repr(mode))
            cmd.end()
            s.output_mode = mode
            return _emit(s, f"output: {mode}", {"output": mode})
        cmd.p.i -= 1
        cmd.p.fail("'budget' or 'output'")
    cmd.p.i -= 1
    cmd.p.fail("a command")


def classify(exc: BaseException) -> int:
    if isinstance(exc, (ParseError, SchemaError, RecursionError)):
        return EXIT_PARSE
    return EXIT_ENGINE


def render_error(line: str, exc: BaseException) -> str:
    if isinstance(exc, RecursionError):
        return "error: input nested too deeply"
    msg = f"error: {exc}"
    if isinstance(exc, ParseError):
        caret = " " * exc.offset + "^" * max(exc.length, 1)
        msg += f"\n  {line}\n  {caret}"
    return msg


def _strip(line: str) -> str:
    line = line.rstrip("\n")
    return "" if line.lstrip().startswith("#") else line


def repl_eval(line: str, session: Session):
    """Evaluate one line; errors come back as rendered text, never raised."""
    line = _strip(line)
    try:
        return execute(line, session), session
    except _Quit:
        session.done = True
        return "", session
    except Exception as exc:  # the session survives any failure
        return render_error(line, exc), session


def run_lines(lines, session: Session, out, err, keep_going: bool, echo: bool) -> int:
    code = 0
    for raw in lines:
        line = _strip(raw)
        if not line.strip():
            continue
        if echo:
            out.write(f"> {line}\n")
        try:
            result = execute(line, session)
        except _Quit:
            break
        except Exception as exc:
            err.write(render_error(line, exc) + "\n")
            code = code or classify(exc)
            if not keep_going:
                break
            continue
        if result:
            out.write(result + "\n")
    return code


def run_script(path: str, budget: Optional[int] = None, json_mode: bool = False,
               keep_going: bool = False, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        with open(path, encoding="utf-8") as fh:
            lines = fh.readlines()
    except OSError as exc:
        err.write(f"error: cannot read {path}: {exc.strerror}\n")
        return 1
    session = Session(budget=budget or _default_budget(), output_mode="json" if json_mode else "text")
    return run_lines(lines, session, out, err, keep_going, echo=True)


def _default_budget() -> int:
    env = os.environ.get("TRANSPOLY_BUDGET")
    if env:
        try:
            value = int(env)
            if value >= 1:
                return value
        except ValueError:
            pass
    return DEFAULT_BUDGET


def _positive(text: str) -> int:
    n = int(text)
    if n < 1:
        raise argparse.ArgumentTypeError("budget must be positive")
    return n


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(prog="transpoly", description="Transfinite polynomial calculator.")
    ap.add_argument("--budget", type=_positive, default=None, help="successor steps per limit segment")
    ap.add_argument("--json", action="store_true", help="JSON output")
    ap.add_argument("--keep-going", action="store_true", help="continue after errors")
    ap.add_argument("--script", metavar="PATH", help="run commands from a file")
    args = ap.parse_args(argv)
    if args.script:
        return run_script(args.script, args.budget, args.json, args.keep_going)
    session = Session(budget=args.budget or _default_budget(), output_mode="json" if args.json else "text")
    if not sys.stdin.isatty():
        return run_lines(sys.stdin, session, sys.stdout, sys.stderr, args.keep_going, echo=False)
    while not session.done:
        try:
            line = input("> ")
        except EOFError:
            break
        out, session = repl_eval(line, session)
        if out:
            print(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
