"""Run the two worked divisions and print their step traces.

    python3 scripts/worked_examples.py [--json]
"""

import argparse

from transpoly import OMEGA, Ordinal, Surinteger, divmod_trace, family, monomial, parse_poly, print_poly, to_json


def show(title, p, q, as_json):
    t = divmod_trace(p, q, 256)
    print(f"== {title}")
    print(f"p = {print_poly(p)}\nq = {print_poly(q)}")
    if as_json:
        print(to_json(t))
        return
    for i, s in enumerate(t.steps):
        print(f"  {i:2d} {s.kind:10s} {print_poly(s.quotient_increment)}")
    print(f"quotient  = {print_poly(t.quotient)}")
    print(f"remainder = {print_poly(t.remainder)}")
    print(f"stopped at step {t.label}; identity holds: {q * t.quotient + t.remainder == p}")


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args()
    w = OMEGA
    w_w = Surinteger.of(Ordinal.omega_power(Ordinal.omega_power(1)))
    show("alternating run", monomial(1, w), parse_poly("X^(2) + 1"), args.json)
    run = family([1], 1, w - 3, 3, None)
    show("run divisor", monomial(1, w_w), run, args.json)
    show("run divisor, lower remainder", monomial(1, w_w) + monomial(1, 5), run, args.json)
    bad = family([1], 1, w_w - w + 3, 3, None)
    print(f"== omega-run candidate quotient\nq * {print_poly(bad)}\n  = {print_poly(run * bad)}")


if __name__ == "__main__":
    main()
