"""Cantor-normal-form ordinals and surintegers.

Surintegers are finite formal sums ``sum(w^a_i * z_i)`` with ordinal
exponents ``a_i`` (strictly decreasing) and nonzero integer ``z_i``. They
add termwise, which keeps the exponent group abelian; recursive ordinal
addition is only used internally to label division steps.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import total_ordering
from typing import Iterable

from transpoly.config import get_limits
from transpoly.errors import RepresentationLimit


class Ordering(enum.IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1

    @classmethod
    def of(cls, sign: int) -> "Ordering":
        return cls((sign > 0) - (sign < 0))


class ArchOrdering(enum.Enum):
    LOWER = "lower"
    SAME = "same"
    HIGHER = "higher"


def _ord_terms_cmp(a, b) -> int:
    for (ea, ca), (eb, cb) in zip(a, b):
        c = _ord_terms_cmp(ea.terms, eb.terms)
        if c:
            return c
        if ca != cb:
            return -1 if ca < cb else 1
    return (len(a) > len(b)) - (len(a) < len(b))


def _check_terms(terms, positive: bool, what: str) -> None:
    lim = get_limits()
    if len(terms) > lim.max_terms:
        raise RepresentationLimit(f"{what} has {len(terms)} terms (cap {lim.max_terms})")
    prev = None
    for exp, coeff in terms:
        if not isinstance(exp, Ordinal):
            raise TypeError(f"{what} exponent must be an Ordinal, got {exp!r}")
        if not isinstance(coeff, int) or isinstance(coeff, bool):
            raise TypeError(f"{what} coefficient must be int, got {coeff!r}")
        if coeff == 0 or (positive and coeff < 0):
            raise ValueError(f"invalid {what} coefficient {coeff}")
        if prev is not None and _ord_terms_cmp(prev.terms, exp.terms) <= 0:
            raise ValueError(f"{what} exponents must be strictly decreasing")
        prev = exp


@total_ordering
@dataclass(frozen=True)
class Ordinal:
    """An ordinal below epsilon_0 in Cantor normal form.

    ``terms`` is a tuple of ``(exponent, coefficient)`` pairs with strictly
    decreasing exponents and positive coefficients; ``()`` is zero.
    """

    terms: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "terms", tuple(self.terms))
        _check_terms(self.terms, True, "ordinal")
        d = self.depth
        if d > get_limits().max_ordinal_depth:
            raise RepresentationLimit(f"ordinal nesting depth {d} exceeds cap")

    @classmethod
    def of(cls, n: int) -> "Ordinal":
        if n < 0:
            raise ValueError("ordinals are nonnegative")
        return cls(((ZERO_ORD, n),)) if n else cls()

    @classmethod
    def omega_power(cls, exponent: "Ordinal | int", coeff: int = 1) -> "Ordinal":
        if isinstance(exponent, int):
            exponent = Ordinal.of(exponent)
        return cls(((exponent, coeff),))

    @property
    def depth(self) -> int:
        if not self.terms:
            return 0
        return 1 + max(e.depth for e, _ in self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def is_finite(self) -> bool:
        return all(e.is_zero() for e, _ in self.terms)

    def finite_value(self) -> int:
        if not self.is_finite():
            raise ValueError("ordinal is infinite")
        return self.terms[0][1] if self.terms else 0

    def __lt__(self, other):
        if isinstance(other, int):
            other = Ordinal.of(other)
        if not isinstance(other, Ordinal):
            return NotImplemented
        return _ord_terms_cmp(self.terms, other.terms) < 0

    def __str__(self):
        from transpoly.textio import print_ordinal

        return print_ordinal(self)

    def __repr__(self):
        return f"Ordinal({self})"


ZERO_ORD = Ordinal()
ONE_ORD = Ordinal(((ZERO_ORD, 1),))
OMEGA_ORD = Ordinal(((ONE_ORD, 1),))


def ord_cmp(a: Ordinal, b: Ordinal) -> Ordering:
    return Ordering.of(_ord_terms_cmp(a.terms, b.terms))


def _ord_add(a: Ordinal, b: Ordinal) -> Ordinal:
    """Recursive (non-commutative) ordinal sum; internal use only."""
    if not b.terms:
        return a
    lead = b.terms[0][0]
    kept = [t for t in a.terms if _ord_terms_cmp(t[0].terms, lead.terms) > 0]
    same = [c for e, c in a.terms if e == lead]
    first = (lead, b.terms[0][1] + (same[0] if same else 0))
    return Ordinal(tuple(kept) + (first,) + b.terms[1:])


@total_ordering
@dataclass(frozen=True)
class Surinteger:
    """Element of the exponent group: a signed formal sum of powers of omega."""

    terms: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "terms", tuple(self.terms))
        _check_terms(self.terms, False, "surinteger")

    @classmethod
    def of(cls, value: "int | Ordinal | Surinteger") -> "Surinteger":
        if isinstance(value, Surinteger):
            return value
        if isinstance(value, Ordinal):
            return cls(value.terms)
        if isinstance(value, int):
            return cls(((ZERO_ORD, value),)) if value else cls()
        raise TypeError(f"cannot make a surinteger from {value!r}")

    @classmethod
    def from_pairs(cls, pairs: Iterable) -> "Surinteger":
        """Normalise an unsorted iterable of (Ordinal, int), merging duplicates."""
        acc: dict = {}
        for e, c in pairs:
            acc[e] = acc.get(e, 0) + c
        items = [(e, c) for e, c in acc.items() if c]
        items.sort(key=lambda t: t[0], reverse=True)
        return cls(tuple(items))

    # -- structure ---------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def sign(self) -> int:
        if not self.terms:
            return 0
        return 1 if self.terms[0][1] > 0 else -1

    @property
    def leading_exponent(self) -> Ordinal:
        if not self.terms:
            raise ValueError("zero has no leading exponent")
        return self.terms[0][0]

    @property
    def finite_part(self) -> int:
        if self.terms and self.terms[-1][0].is_zero():
            return self.terms[-1][1]
        return 0

    @property
    def base(self) -> "Surinteger":
        """The surinteger with its finite (omega^0) term removed."""
        if self.terms and self.terms[-1][0].is_zero():
            return Surinteger(self.terms[:-1])
        return self

    def is_finite(self) -> bool:
        return not self.base.terms

    def to_ordinal(self) -> Ordinal:
        if any(c < 0 for _, c in self.terms):
            raise ValueError(f"{self} is not an ordinal")
        return Ordinal(self.terms)

    # -- arithmetic --------------------------------------------------------
    def __add__(self, other):
        if isinstance(other, int):
            other = Surinteger.of(other)
        if not isinstance(other, Surinteger):
            return NotImplemented
        return Surinteger.from_pairs(self.terms + other.terms)

    __radd__ = __add__

    def __neg__(self):
        return Surinteger(tuple((e, -c) for e, c in self.terms))

    def __sub__(self, other):
        if isinstance(other, int):
            other = Surinteger.of(other)
        if not isinstance(other, Surinteger):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, k):
        if not isinstance(k, int) or isinstance(k, bool):
            return NotImplemented
        if k == 0:
            return Surinteger()
        return Surinteger(tuple((e, c * k) for e, c in self.terms))

    __rmul__ = __mul__

    def __lt__(self, other):
        if isinstance(other, int):
            other = Surinteger.of(other)
        if not isinstance(other, Surinteger):
            return NotImplemented
        return (self - other).sign() < 0

    def __eq__(self, other):
        if isinstance(other, int) and not isinstance(other, bool):
            other = Surinteger.of(other)
        if not isinstance(other, Surinteger):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(self.terms)

    def __str__(self):
        from transpoly.textio import print_surint

        return print_surint(self)

    def __repr__(self):
        return f"Surinteger({self})"


OMEGA = Surinteger(((ONE_ORD, 1),))


def si_add(a: Surinteger, b: Surinteger) -> Surinteger:
    return a + b


def si_neg(a: Surinteger) -> Surinteger:
    return -a


def si_cmp(a: Surinteger, b: Surinteger) -> Ordering:
    return Ordering.of((a - b).sign())


def si_arch_cmp(a: Surinteger, b: Surinteger) -> ArchOrdering:
    """Compare the Archimedean classes of two positive surintegers."""
    if a.sign() <= 0 or b.sign() <= 0:
        raise ValueError("si_arch_cmp needs positive surintegers")
    c = ord_cmp(a.leading_exponent, b.leading_exponent)
    if c is Ordering.LESS:
        return ArchOrdering.LOWER
    if c is Ordering.GREATER:
        return ArchOrdering.HIGHER
    return ArchOrdering.SAME


def omega_power(eta: "Ordinal | int") -> Surinteger:
    return Surinteger.of(Ordinal.omega_power(eta))


def below_gamma(a: Surinteger, eta: "Ordinal | int") -> bool:
    """True iff ``a < w^eta``."""
    if isinstance(eta, int):
        eta = Ordinal.of(eta)
    return a < omega_power(eta)
