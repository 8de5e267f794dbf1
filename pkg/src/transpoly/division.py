"""Transfinite long division, Euclidean norm, extended gcd and verification.

Successor steps are ordinary long-division steps. Past a limit the engine
extrapolates the omega-tail of quotient increments sharing an infinite
Archimedean base (Berlekamp-Massey over the increments' coefficients),
multiplies the tail back exactly and accepts it only when the new remainder
sits strictly below the whole tail. A rejected guess costs nothing but more
successor steps; exhaustion is reported, never a wrong quotient.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from transpoly import _upoly as up
from transpoly.config import DivisionConfig
from transpoly.errors import BudgetExhausted, ZeroDivisorError, ZeroPolyError
from transpoly.exponents import Ordinal, Surinteger
from transpoly.napoly import ONE, ZERO, NakedPoly, X, _run, monomial

EXHAUSTED = "exhausted"


@dataclass(frozen=True)
class Step:
    kind: str  # "successor" or "limit_jump"
    quotient_increment: NakedPoly
    remainder_after: NakedPoly


@dataclass(frozen=True)
class DivisionTrace:
    steps: tuple
    limit_jumps: int
    successors: int
    quotient: NakedPoly
    remainder: NakedPoly
    exhausted: bool

    @property
    def label(self) -> Ordinal:
        """The ordinal step ``w*limit_jumps + successors`` at which division stopped."""
        terms = []
        if self.limit_jumps:
            terms.append((Ordinal.of(1), self.limit_jumps))
        if self.successors:
            terms.append((Ordinal(), self.successors))
        return Ordinal(tuple(terms))

    @property
    def successor_steps(self) -> int:
        return sum(1 for s in self.steps if s.kind == "successor")


def norm(p: NakedPoly) -> Surinteger:
    return p.degree()


def _below(s: NakedPoly, q_deg: Surinteger) -> bool:
    return s.is_zero() or s.degree() < q_deg


@dataclass
class _Segment:
    """Successor increments since the last accepted jump."""

    start_remainder: NakedPoly
    incs: list = field(default_factory=list)  # (exponent, coeff, remainder_before)
    rejected: set = field(default_factory=set)


def _tail_candidate(seg: _Segment, cfg: DivisionConfig):
    """Fit the trailing same-base increments; return (run_start_index, T) or None."""
    base = seg.incs[-1][0].base
    i = len(seg.incs)
    while i > 0 and seg.incs[i - 1][0].base == base:
        i -= 1
    run = seg.incs[i:]
    if len(run) < cfg.window:
        return None
    top = run[0][0].finite_part
    dense = [Fraction(0)] * (top - run[-1][0].finite_part + 1)
    for e, c, _ in run:
        dense[top - e.finite_part] = c
    C, L = up.berlekamp_massey(dense)
    if L == 0 or L > cfg.max_fit_order or len(dense) < 2 * L + 2 or len(C) == 1:
        return None
    key = (i, C)
    if key in seg.rejected:
        return None
    num = up.truncate(up.mul(tuple(dense), C), L)
    if not num:
        return None
    try:
        T = _run(base, top, num, C)
    except Exception:
        seg.rejected.add(key)
        return None
    return i, T, key


def _accepts(s_new: NakedPoly, q_deg: Surinteger, base: Surinteger) -> bool:
    if _below(s_new, q_deg):
        return True
    gap = s_new.degree() - q_deg - base
    return gap.sign() < 0 and not gap.is_finite()


def divmod_trace(
    p: NakedPoly,
    q: NakedPoly,
    budget: Optional[int] = None,
    config: Optional[DivisionConfig] = None,
) -> DivisionTrace:
    """Divide ``p`` by ``q``: returns a trace with ``p == q*quotient + remainder``."""
    cfg = config or DivisionConfig()
    if budget is not None:
        if budget < 1:
            raise ValueError("budget must be positive")
    else:
        budget = cfg.budget
    if q.is_zero():
        raise ZeroDivisorError("division by the zero polynomial")
    q_deg, q_lc = q.degree(), q.leading_coefficient()

    steps: list = []
    quotient = ZERO
    s = p
    jumps = 0
    seg = _Segment(s)
    exhausted = False

    while not _below(s, q_deg):
        if len(seg.incs) >= budget or jumps > cfg.max_jumps:
            exhausted = True
            break
        e = s.degree() - q_deg
        c = s.leading_coefficient() / q_lc
        inc = monomial(c, e)
        before = s
        s = s - q * inc
        quotient = quotient + inc
        steps.append(Step("successor", inc, s))
        seg.incs.append((e, c, before))

        if e.is_finite() or _below(s, q_deg):
            continue
        found = _tail_candidate(seg, cfg)
        if found is None:
            continue
        i, T, key = found
        run_start = seg.incs[i][2]
        s_new = run_start - q * T
        if not _accepts(s_new, q_deg, e.base):
            seg.rejected.add(key)
            continue
        done = sum((monomial(c_, e_) for e_, c_, _ in seg.incs[i:]), ZERO)
        jump_inc = T - done
        quotient = quotient + jump_inc
        s = s_new
        steps.append(Step("limit_jump", jump_inc, s))
        jumps += 1
        seg = _Segment(s)

    trailing = len(seg.incs)
    if q * quotient + s != p:  # pragma: no cover - exactness guard
        raise ArithmeticError("division identity failed")
    return DivisionTrace(tuple(steps), jumps, trailing, quotient, s, exhausted)


def naked_divmod(p: NakedPoly, q: NakedPoly, budget: Optional[int] = None):
    """``(quotient, remainder)``; raises BudgetExhausted with the partial trace."""
    t = divmod_trace(p, q, budget)
    if t.exhausted:
        raise BudgetExhausted(
            f"budget exhausted after {t.successor_steps} steps", partial=t
        )
    return t.quotient, t.remainder


def verify_division(p, q, r, s) -> bool:
    if q.is_zero():
        return False
    return p == q * r + s and _below(s, q.degree())


def verify_factor(p, a, b) -> bool:
    return a * b == p


def is_root_poly(q: NakedPoly) -> bool:
    """True iff ``q == X + c`` for a rational ``c``."""
    d = q - X
    return d.is_zero() or (d.is_finite_support() and d.degree() == 0)


def verify_split(p: NakedPoly, roots: Sequence[NakedPoly]) -> bool:
    if p.is_zero() or not all(is_root_poly(r) for r in roots):
        return False
    prod = ONE
    for r in roots:
        prod = prod * r
    return prod.scale(p.leading_coefficient() / prod.leading_coefficient()) == p


def ideal_member(x: NakedPoly, p: NakedPoly, budget: Optional[int] = None):
    """True/False, or :data:`EXHAUSTED` when the division did not finish."""
    if p.is_zero():
        raise ZeroDivisorError("the zero ideal has no divisor")
    t = divmod_trace(x, p, budget)
    if t.exhausted:
        return EXHAUSTED
    return t.remainder.is_zero()


def ext_gcd(a: NakedPoly, b: NakedPoly, budget: Optional[int] = None):
    """Monic ``g`` with ``u*a + v*b == g`` along the Euclidean chain."""
    if a.is_zero() and b.is_zero():
        raise ZeroPolyError("gcd of two zero polynomials")
    r0, r1 = a, b
    u0, u1 = ONE, ZERO
    v0, v1 = ZERO, ONE
    chain = [r0, r1]
    while not r1.is_zero():
        t = divmod_trace(r0, r1, budget)
        if t.exhausted:
            raise BudgetExhausted(
                f"budget exhausted after {t.successor_steps} steps in the Euclidean chain",
                partial=chain + [t.remainder],
            )
        Q = t.quotient
        r0, r1 = r1, t.remainder
        u0, u1 = u1, u0 - Q * u1
        v0, v1 = v1, v0 - Q * v1
        chain.append(r1)
    inv = 1 / r0.leading_coefficient()
    g, u, v = r0.scale(inv), u0.scale(inv), v0.scale(inv)
    if u * a + v * b != g:  # pragma: no cover - exactness guard
        raise ArithmeticError("Bezout identity failed")
    return g, u, v
