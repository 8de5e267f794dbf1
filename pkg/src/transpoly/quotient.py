"""Arithmetic modulo a principal ideal, on canonical remainders."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from transpoly.division import divmod_trace, ext_gcd
from transpoly.errors import (
    BudgetExhausted,
    ModulusMismatch,
    NotInvertible,
    ZeroDivisorError,
)
from transpoly.exponents import Ordering, Surinteger
from transpoly.napoly import ONE, NakedPoly, monomial


@dataclass(frozen=True)
class Modulus:
    poly: NakedPoly
    asserted_irreducible: bool = False

    def __post_init__(self):
        if self.poly.is_zero() or self.poly.degree().sign() <= 0:
            raise ValueError("a modulus needs positive degree")


@dataclass(frozen=True)
class QuotElem:
    """A residue class, held as the division remainder of its representative."""

    rep: NakedPoly
    modulus: Modulus

    def is_zero(self) -> bool:
        return self.rep.is_zero()

    def __add__(self, other):
        return q_add(self, other)

    def __neg__(self):
        return q_neg(self)

    def __sub__(self, other):
        return q_add(self, q_neg(other))

    def __mul__(self, other):
        return q_mul(self, other)

    def __str__(self):
        return str(self.rep)


def root_adjoin(alpha, c, irreducible: bool = False) -> Modulus:
    """The modulus ``X^alpha - c``."""
    alpha = Surinteger.of(alpha)
    if alpha.sign() <= 0:
        raise ValueError(f"root adjunction needs a positive exponent, got {alpha}")
    return Modulus(monomial(1, alpha) - monomial(Fraction(c), 0), irreducible)


def reduce(p: NakedPoly, m: Modulus, budget: Optional[int] = None) -> QuotElem:
    t = divmod_trace(p, m.poly, budget)
    if t.exhausted:
        raise BudgetExhausted(
            f"budget exhausted after {t.successor_steps} steps; "
            f"partial remainder degree {t.remainder.degree()}",
            partial=t,
        )
    return QuotElem(t.remainder, m)


def congruent(p: NakedPoly, q: NakedPoly, m: Modulus, budget: Optional[int] = None) -> bool:
    return reduce(p - q, m, budget).is_zero()


def _same(a: QuotElem, b: QuotElem) -> Modulus:
    if a.modulus != b.modulus:
        raise ModulusMismatch("elements belong to different quotient rings")
    return a.modulus


def q_add(a: QuotElem, b: QuotElem, budget: Optional[int] = None) -> QuotElem:
    return reduce(a.rep + b.rep, _same(a, b), budget)


def q_neg(a: QuotElem) -> QuotElem:
    return QuotElem(-a.rep, a.modulus)


def q_mul(a: QuotElem, b: QuotElem, budget: Optional[int] = None) -> QuotElem:
    return reduce(a.rep * b.rep, _same(a, b), budget)


def q_inv(a: QuotElem, budget: Optional[int] = None) -> QuotElem:
    """Inverse via the Bezout identity; a nontrivial gcd is raised as a witness."""
    if a.is_zero():
        raise ZeroDivisorError("the zero class has no inverse")
    m = a.modulus
    g, _, v = ext_gcd(m.poly, a.rep, budget)
    if g != ONE:
        raise NotInvertible(f"gcd with the modulus is {g}, not a unit", witness=g)
    inv = reduce(v, m, budget)
    if q_mul(a, inv, budget).rep != ONE:  # pragma: no cover - exactness guard
        raise ArithmeticError("inverse check failed")
    return inv


def q_cmp(a: QuotElem, b: QuotElem) -> Ordering:
    _same(a, b)
    return a.rep.cmp(b.rep)
