"""Naked polynomials: rational coefficients on surinteger exponents.

A polynomial is stored as one *block* per Archimedean base. The base is an
exponent with its finite part stripped, so every exponent is ``base + c``
for an integer offset ``c``. A block with top offset ``t`` holds the
descending run

    sum_k a_k X^(base + t - k),    sum_k a_k Y^k = num(Y) / den(Y),

as a reduced rational generating function in ``Y = 1/X`` with
``den(0) == 1`` and ``num(0) != 0``. Reduced fractions are unique, so
structural equality is value equality. A block on base 0 is a classical
polynomial (``den == 1``).

The user-facing description is :attr:`NakedPoly.families`: head monomials,
geometric-type runs ``P(n) * rho^n * X^(e - d*n)`` (:class:`TermFamily`),
and, for runs whose recurrence has non-rational characteristic ratios,
:class:`RecurrentRun`.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Optional, Union

from transpoly import _upoly as up
from transpoly.config import get_limits
from transpoly.errors import (
    InfiniteTailUnderflow,
    NonDescendingInput,
    RepresentationLimit,
    ZeroPolyError,
)
from transpoly.exponents import (
    OMEGA_ORD,
    Ordering,
    Ordinal,
    Surinteger,
    _ord_add,
    below_gamma,
)

Rational = Union[int, Fraction]
ExpLike = Union[int, Ordinal, Surinteger]


def _exp(e: ExpLike) -> Surinteger:
    return Surinteger.of(e)


@dataclass(frozen=True)
class _Block:
    base: Surinteger
    top: int
    num: tuple
    den: tuple

    @property
    def lead_exp(self) -> Surinteger:
        return self.base + self.top

    def is_finite(self) -> bool:
        return self.den == up.ONE


def _make_block(base: Surinteger, top: int, num, den) -> Optional[_Block]:
    num = up.trim(num)
    if not num:
        return None
    if den != up.ONE:
        g = up.gcd(num, den)
        if len(g) > 1:
            num = up.exact_div(num, g)
            den = up.exact_div(den, g)
        if den[0] != 1:
            c = den[0]
            num = up.scale(num, 1 / c)
            den = up.scale(den, 1 / c)
    lead = next(i for i, c in enumerate(num) if c)
    if lead:
        num = num[lead:]
        top -= lead
    lim = get_limits()
    if len(den) - 1 > lim.max_den_degree:
        raise RepresentationLimit(f"run recurrence order {len(den) - 1} exceeds cap")
    if len(num) - 1 > lim.max_num_degree:
        raise RepresentationLimit(f"run length {len(num)} exceeds cap")
    if base.is_zero() and (den != up.ONE or top - (len(num) - 1) < 0):
        raise InfiniteTailUnderflow("finite-class run reaches negative exponents")
    return _Block(base, top, num, den)


def _add_blocks(a: _Block, b: _Block) -> Optional[_Block]:
    t = max(a.top, b.top)
    if a.den == b.den:
        fa = fb = up.ONE
        den = a.den
    else:
        g = up.gcd(a.den, b.den)
        fa = up.exact_div(b.den, g)
        fb = up.exact_div(a.den, g)
        den = up.mul(a.den, fa)
    num = up.add(
        up.shift(up.mul(a.num, fa), t - a.top), up.shift(up.mul(b.num, fb), t - b.top)
    )
    return _make_block(a.base, t, num, den)


def _mul_blocks(a: _Block, b: _Block) -> Optional[_Block]:
    return _make_block(
        a.base + b.base, a.top + b.top, up.mul(a.num, b.num), up.mul(a.den, b.den)
    )


def _block_terms(b: _Block) -> Iterator[tuple[Surinteger, Fraction]]:
    """Nonzero coordinates of one block, in decreasing exponent order."""
    num, den = b.num, b.den
    hist: list = []
    for k in itertools.count():
        if den == up.ONE and k >= len(num):
            return
        acc = num[k] if k < len(num) else Fraction(0)
        for i in range(1, min(k, len(den) - 1) + 1):
            acc -= den[i] * hist[k - i]
        hist.append(acc)
        if len(hist) > len(den) + 1:
            # only the last deg(den) values are needed; keep indices stable
            hist[k - len(den) - 1] = None
        if acc:
            yield b.base + (b.top - k), acc


@dataclass(frozen=True)
class TermFamily:
    """A run ``sum_{n < length} P(n) * ratio^n * X^(start_exp - step*n)``.

    ``coeff_poly`` lists the coefficients of ``P`` in ``n`` (constant term
    first). ``length`` is a positive int or ``None`` for an omega-length run.
    """

    coeff_poly: tuple
    ratio: Fraction
    start_exp: Surinteger
    step: int
    length: Optional[int]

    @property
    def is_infinite(self) -> bool:
        return self.length is None

    def coefficient(self, n: int) -> Fraction:
        return up.evaluate(self.coeff_poly, n) * self.ratio**n

    def to_poly(self) -> "NakedPoly":
        return family(self.coeff_poly, self.ratio, self.start_exp, self.step, self.length)


@dataclass(frozen=True)
class RecurrentRun:
    """A run ``sum_k a_k X^(start_exp - k)`` with ``sum a_k Y^k = num/den``."""

    start_exp: Surinteger
    numerator: tuple
    denominator: tuple

    def to_poly(self) -> "NakedPoly":
        return recurrent_run(self.start_exp, self.numerator, self.denominator)


class NakedPoly:
    """Immutable element of the naked polynomial ring over Q."""

    __slots__ = ("_blocks", "_families", "_hash")

    def __init__(self, blocks: Iterable[_Block] = ()):
        merged: dict = {}
        for b in blocks:
            if b is None:
                continue
            if b.base in merged:
                s = _add_blocks(merged[b.base], b)
                if s is None:
                    del merged[b.base]
                else:
                    merged[b.base] = s
            else:
                merged[b.base] = b
        if len(merged) > get_limits().max_families:
            raise RepresentationLimit(f"{len(merged)} Archimedean runs exceed cap")
        self._blocks = tuple(sorted(merged.values(), key=lambda b: b.base, reverse=True))
        self._families = None
        self._hash = None

    # -- basic queries ------------------------------------------------------
    @property
    def blocks(self) -> tuple:
        return self._blocks

    def is_zero(self) -> bool:
        return not self._blocks

    def __bool__(self):
        return bool(self._blocks)

    def degree(self) -> Surinteger:
        if not self._blocks:
            raise ZeroPolyError("degree of the zero polynomial is undefined")
        return self._blocks[0].lead_exp

    def leading_coefficient(self) -> Fraction:
        if not self._blocks:
            raise ZeroPolyError("zero polynomial has no leading coefficient")
        return self._blocks[0].num[0]

    def is_finite_support(self) -> bool:
        return all(b.is_finite() for b in self._blocks)

    # -- ring operations ------------------------------------------------------
    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return NakedPoly(self._blocks + other._blocks)

    __radd__ = __add__

    def __neg__(self):
        return NakedPoly(_Block(b.base, b.top, up.neg(b.num), b.den) for b in self._blocks)

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return NakedPoly(
            _mul_blocks(a, b) for a in self._blocks for b in other._blocks
        )

    __rmul__ = __mul__

    def scale(self, c: Rational) -> "NakedPoly":
        c = Fraction(c)
        if c == 0:
            return ZERO
        return NakedPoly(_Block(b.base, b.top, up.scale(b.num, c), b.den) for b in self._blocks)

    # -- ordering -------------------------------------------------------------
    def cmp(self, other: "NakedPoly") -> Ordering:
        d = _coerce(other) - self
        if d.is_zero():
            return Ordering.EQUAL
        return Ordering.LESS if d.leading_coefficient() > 0 else Ordering.GREATER

    def __lt__(self, other):
        return self.cmp(other) is Ordering.LESS

    def __le__(self, other):
        return self.cmp(other) is not Ordering.GREATER

    def __gt__(self, other):
        return self.cmp(other) is Ordering.GREATER

    def __ge__(self, other):
        return self.cmp(other) is not Ordering.LESS

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self._blocks == other._blocks

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self._blocks)
        return self._hash

    # -- coordinate views ---------------------------------------------------------
    def terms(self) -> "TermCursor":
        return TermCursor(self)

    def support_seq(self, k: int) -> list:
        return list(itertools.islice(self.terms(), k))

    def support_order_type(self) -> Ordinal:
        total = Ordinal()
        for b in self._blocks:
            if b.is_finite():
                n = sum(1 for c in b.num if c)
                total = _ord_add(total, Ordinal.of(n))
            else:
                total = _ord_add(total, OMEGA_ORD)
        return total

    def in_subring(self, eta: "Ordinal | int") -> bool:
        return self.is_zero() or below_gamma(self.degree(), eta)

    @property
    def families(self) -> tuple:
        if self._families is None:
            out = []
            for b in self._blocks:
                out.extend(_export_block(b))
            out.sort(key=_item_sort_key)
            self._families = tuple(out)
        return self._families

    def __repr__(self):
        from transpoly.textio import print_poly

        return f"NakedPoly({print_poly(self)})"

    def __str__(self):
        from transpoly.textio import print_poly

        return print_poly(self)


def _item_sort_key(item):
    # descending start exponent; ties only between same-class families
    ratio = getattr(item, "ratio", Fraction(0))
    return (_Desc(item.start_exp), ratio)


class _Desc:
    __slots__ = ("v",)

    def __init__(self, v):
        self.v = v

    def __lt__(self, other):
        return other.v < self.v

    def __eq__(self, other):
        return self.v == other.v


def _coerce(x) -> NakedPoly:
    if isinstance(x, NakedPoly):
        return x
    if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
        return monomial(x, 0)
    return NotImplemented


class TermCursor:
    """Single-consumer stream of ``(exponent, coefficient)`` in decreasing order."""

    def __init__(self, source: NakedPoly):
        self.source = source
        self._it = itertools.chain.from_iterable(_block_terms(b) for b in source.blocks)

    def __iter__(self):
        return self

    def __next__(self):
        return next(self._it)


# -- constructors ---------------------------------------------------------------


def monomial(c: Rational, e: ExpLike) -> NakedPoly:
    """``c * X^e``; the bracket symbol placing ``c`` at coordinate ``e``."""
    e = _exp(e)
    if e.sign() < 0:
        raise ValueError(f"negative exponent {e}")
    c = Fraction(c)
    if c == 0:
        return ZERO
    return NakedPoly([_Block(e.base, e.finite_part, (c,), up.ONE)])


def family(
    coeff_poly,
    ratio: Rational,
    start_exp: ExpLike,
    step: int,
    length: Optional[int],
) -> NakedPoly:
    """Build ``sum_{n<length} P(n) ratio^n X^(start_exp - step*n)``.

    ``length=None`` means an omega-length run, which needs a start exponent
    in an infinite Archimedean class.
    """
    if isinstance(coeff_poly, (int, Fraction)):
        coeff_poly = (coeff_poly,)
    P = up.trim(coeff_poly)
    rho = Fraction(ratio)
    e = _exp(start_exp)
    if not isinstance(step, int) or step < 1:
        raise ValueError("step must be a positive integer")
    if e.sign() < 0:
        raise ValueError(f"negative start exponent {e}")
    lim = get_limits()
    if len(P) - 1 > lim.max_coeff_degree:
        raise RepresentationLimit(f"coefficient polynomial degree {len(P) - 1} exceeds cap")
    base, top = e.base, e.finite_part
    if length is None:
        if base.is_zero():
            raise InfiniteTailUnderflow(
                f"omega-length run from finite exponent {e} underflows"
            )
        if not P:
            return ZERO
        if rho == 0:
            raise ValueError("an omega-length run needs a nonzero ratio")
        delta = len(P) - 1
        den = up.power(up.trim([1] + [0] * (step - 1) + [-rho]), delta + 1)
        head = [Fraction(0)] * (step * delta + 1)
        for n in range(delta + 1):
            head[step * n] = up.evaluate(P, n) * rho**n
        num = up.truncate(up.mul(tuple(head), den), step * delta + 1)
        return NakedPoly([_make_block(base, top, num, den)])
    if not isinstance(length, int) or length < 1:
        raise ValueError("length must be a positive integer or None")
    if length > lim.max_num_degree:
        raise RepresentationLimit(f"finite run length {length} exceeds cap")
    if e - step * (length - 1) < 0:
        raise InfiniteTailUnderflow(f"finite run from {e} reaches a negative exponent")
    num = [Fraction(0)] * (step * (length - 1) + 1)
    for n in range(length):
        num[step * n] = up.evaluate(P, n) * rho**n
    return NakedPoly([_make_block(base, top, num, up.ONE)])


def recurrent_run(start_exp: ExpLike, numerator, denominator) -> NakedPoly:
    """The run whose coefficients are the power series of numerator/denominator."""
    e = _exp(start_exp)
    if e.sign() < 0:
        raise ValueError(f"negative start exponent {e}")
    num, den = up.trim(numerator), up.trim(denominator)
    if not den or den[0] == 0:
        raise ValueError("denominator must have a nonzero constant term")
    return NakedPoly([_make_block(e.base, e.finite_part, num, den)])


def _run(base: Surinteger, top: int, num, den) -> NakedPoly:
    return NakedPoly([_make_block(base, top, num, den)])


def from_terms(terms) -> NakedPoly:
    """Inverse of :meth:`NakedPoly.terms` (finite lists, or a family-backed cursor)."""
    if isinstance(terms, TermCursor):
        return terms.source
    blocks = []
    prev = None
    for e, c in terms:
        e = _exp(e)
        if prev is not None and not e < prev:
            raise NonDescendingInput(f"exponent {e} does not decrease after {prev}")
        prev = e
        blocks.append(monomial(c, e).blocks)
    return NakedPoly(itertools.chain.from_iterable(blocks))


def to_terms(p: NakedPoly) -> TermCursor:
    return p.terms()


# -- export to families -----------------------------------------------------------


def _unit_family(c: Fraction, e: Surinteger) -> TermFamily:
    return TermFamily((c,), Fraction(1), e, 1, 1)


def _export_block(b: _Block) -> list:
    if b.is_finite():
        return [
            _unit_family(c, b.base + (b.top - k)) for k, c in enumerate(b.num) if c
        ]
    lim = get_limits()
    D = up.root_period(b.den, lim.max_step)
    if D is not None:
        E = up.minpoly_of_power(b.den, D)
        # a split that would not re-sum within the recurrence cap stays a recurrence
        if D * (len(E) - 1) <= lim.max_den_degree:
            roots = up.rational_roots(E)
            if roots is not None:
                items = _split_families(b, D, E, roots)
                if items is not None:
                    return items
    return [RecurrentRun(b.lead_exp, b.num, b.den)]


def _split_families(b: _Block, D: int, E, roots) -> Optional[list]:
    lim = get_limits()
    # E(z) = prod (1 - mu z)^m with mu = 1/root
    mults = sorted(((1 / r, m) for r, m in roots.items()), key=lambda t: t[0])
    if any(m - 1 > lim.max_coeff_degree for _, m in mults):
        return None
    E_of_YD = up.trim(
        itertools.chain.from_iterable(
            [c] + [0] * (D - 1) for c in E
        )
    )
    Np = up.mul(b.num, up.exact_div(E_of_YD, b.den))
    basis = []
    for mu, m in mults:
        lin = (Fraction(1), -mu)
        for l in range(1, m + 1):
            basis.append((mu, l, up.exact_div(E, up.power(lin, l))))
    dE = len(E) - 1
    items: list = []
    n_fam = 0
    for j in range(D):
        Nj = up.trim(Np[j::D])
        if not Nj:
            continue
        H, R = up.poly_divmod(Nj, E)
        rows = [[bp[i] if i < len(bp) else 0 for _, _, bp in basis] for i in range(dE)]
        rhs = [R[i] if i < len(R) else 0 for i in range(dE)]
        A = up.solve(rows, rhs)
        comps: dict = {}
        for (mu, l, _), a in zip(basis, A):
            if a:
                comps[mu] = up.add(comps.get(mu, ()), up.scale(up.binomial_poly(l), a))
        comps = {mu: P for mu, P in comps.items() if P}
        n0 = len(H)

        def exp_at(n):
            return b.base + (b.top - j - D * n)

        for n in range(n0):
            val = H[n] + sum(up.evaluate(P, n) * mu**n for mu, P in comps.items())
            if val:
                items.append(_unit_family(val, exp_at(n)))
        for mu, P in comps.items():
            Pn = up.scale(up.taylor_shift(P, n0), mu**n0)
            t = next(t for t in itertools.count() if up.evaluate(Pn, t) != 0)
            if t:
                Pn = up.scale(up.taylor_shift(Pn, t), mu**t)
            items.append(TermFamily(Pn, mu, exp_at(n0 + t), D, None))
            n_fam += 1
    if n_fam > lim.max_families:
        return None
    return items


ZERO = NakedPoly()
ONE = monomial(1, 0)
X = monomial(1, 1)
