"""How often does limit detection succeed, and how many steps does it need?

Divides monomials X^E by random classical divisors (E in a higher
Archimedean class) and reports jump counts, successor steps and exhaustion
rates per divisor length. Results are written as CSV to stdout.

    python3 scripts/division_stats.py --trials 200 --seed 0 --window 4
"""

import argparse
import csv
import random
import sys
import time
from dataclasses import dataclass, fields

from transpoly import OMEGA, Surinteger, divmod_trace, monomial
from transpoly.config import DivisionConfig
from transpoly.errors import RepresentationLimit


@dataclass
class StatsConfig:
    trials: int = 200
    seed: int = 0
    max_terms: int = 6
    max_degree: int = 8
    budget: int = 256
    window: int = 4
    max_fit_order: int = 16


def random_divisor(rng, cfg):
    degs = rng.sample(range(cfg.max_degree + 1), rng.randint(2, min(cfg.max_terms, cfg.max_degree + 1)))
    q = monomial(1, max(degs))
    for d in degs:
        if d != max(degs):
            q = q + monomial(rng.choice([-3, -2, -1, 1, 2, 3]), d)
    return q, len(degs)


def run(cfg: StatsConfig):
    rng = random.Random(cfg.seed)
    dcfg = DivisionConfig(budget=cfg.budget, window=cfg.window, max_fit_order=cfg.max_fit_order)
    rows = {}
    for _ in range(cfg.trials):
        q, terms = random_divisor(rng, cfg)
        E = OMEGA * rng.randint(1, 3) + rng.randint(0, 5)
        start = time.perf_counter()
        try:
            t = divmod_trace(monomial(1, E), q, config=dcfg)
            outcome = "exhausted" if t.exhausted else "done"
            steps, jumps = t.successor_steps, t.limit_jumps
        except RepresentationLimit:
            outcome, steps, jumps = "limit", 0, 0
        row = rows.setdefault(terms, {"terms": terms, "trials": 0, "done": 0, "exhausted": 0, "limit": 0, "steps": 0, "jumps": 0, "seconds": 0.0})
        row["trials"] += 1
        row[outcome] += 1
        row["steps"] += steps
        row["jumps"] += jumps
        row["seconds"] += time.perf_counter() - start
    out = []
    for terms in sorted(rows):
        r = rows[terms]
        n = r["trials"]
        out.append({
            "divisor_terms": terms,
            "trials": n,
            "done_rate": round(r["done"] / n, 3),
            "exhausted_rate": round(r["exhausted"] / n, 3),
            "limit_rate": round(r["limit"] / n, 3),
            "mean_successor_steps": round(r["steps"] / n, 2),
            "mean_jumps": round(r["jumps"] / n, 2),
            "mean_ms": round(1000 * r["seconds"] / n, 2),
        })
    return out


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for f in fields(StatsConfig):
        ap.add_argument(f"--{f.name.replace('_', '-')}", type=type(f.default), default=f.default)
    cfg = StatsConfig(**vars(ap.parse_args(argv)))
    rows = run(cfg)
    w = csv.DictWriter(sys.stdout, fieldnames=list(rows[0]))
    w.writeheader()
    w.writerows(rows)


if __name__ == "__main__":
    main()
