"""Dense univariate polynomials over Q as tuples of Fractions, low degree first.

Every function returns trimmed tuples (no trailing zeros); ``()`` is zero.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

import numpy as np

Poly = tuple  # tuple[Fraction, ...]

ONE: Poly = (Fraction(1),)


def trim(p: Sequence) -> Poly:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return tuple(Fraction(c) for c in p)


def deg(p: Poly) -> int:
    return len(p) - 1


def add(a: Poly, b: Poly) -> Poly:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return trim(out)


def neg(a: Poly) -> Poly:
    return tuple(-c for c in a)


def sub(a: Poly, b: Poly) -> Poly:
    return add(a, neg(b))


def scale(a: Poly, c) -> Poly:
    if c == 0:
        return ()
    return tuple(x * c for x in a)


def shift(a: Poly, k: int) -> Poly:
    """Multiply by Y**k (k >= 0)."""
    if not a or k == 0:
        return a
    return (Fraction(0),) * k + a


def mul(a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return ()
    if len(a) == 1:
        return scale(b, a[0])
    if len(b) == 1:
        return scale(a, b[0])
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return trim(out)


def power(a: Poly, n: int) -> Poly:
    out = ONE
    for _ in range(n):
        out = mul(out, a)
    return out


def truncate(a: Poly, n: int) -> Poly:
    """Reduce modulo Y**n."""
    return trim(a[:n])


def poly_divmod(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if len(a) < len(b):
        return (), a
    rem = list(a)
    lead = b[-1]
    q = [Fraction(0)] * (len(a) - len(b) + 1)
    for k in range(len(a) - len(b), -1, -1):
        c = rem[k + len(b) - 1] / lead
        q[k] = c
        if c:
            for j, y in enumerate(b):
                rem[k + j] -= c * y
    return trim(q), trim(rem[: len(b) - 1])


def exact_div(a: Poly, b: Poly) -> Poly:
    q, r = poly_divmod(a, b)
    if r:
        raise ArithmeticError("inexact polynomial division")
    return q


def monic(a: Poly) -> Poly:
    return scale(a, 1 / a[-1]) if a else a


def gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd."""
    while b:
        a, b = b, poly_divmod(a, b)[1]
    return monic(a)


def evaluate(p: Poly, x):
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def derivative(p: Poly) -> Poly:
    return trim([i * c for i, c in enumerate(p)][1:])


def taylor_shift(p: Poly, s) -> Poly:
    """Return the polynomial n -> p(n + s)."""
    out: Poly = ()
    for c in reversed(p):
        out = add(mul(out, (Fraction(s), Fraction(1))), (c,) if c else ())
    return out


def series(num: Poly, den: Poly, n: int) -> list:
    """First ``n`` coefficients of num/den as a power series (den[0] != 0)."""
    out = []
    d0 = den[0]
    for k in range(n):
        acc = num[k] if k < len(num) else Fraction(0)
        for i in range(1, min(k, len(den) - 1) + 1):
            acc -= den[i] * out[k - i]
        out.append(acc / d0)
    return out


def berlekamp_massey(seq: Sequence) -> tuple[Poly, int]:
    """Shortest linear recurrence for ``seq``.

    Returns ``(C, L)`` with C[0] == 1 and ``sum(C[i]*seq[k-i]) == 0`` for
    all ``L <= k < len(seq)``.
    """
    s = [Fraction(x) for x in seq]
    C = [Fraction(1)]
    B = [Fraction(1)]
    L, m, b = 0, 1, Fraction(1)
    for n in range(len(s)):
        d = s[n]
        for i in range(1, L + 1):
            if i < len(C):
                d += C[i] * s[n - i]
        if d == 0:
            m += 1
            continue
        coef = d / b
        T = list(C)
        need = len(B) + m
        if len(C) < need:
            C += [Fraction(0)] * (need - len(C))
        for i, x in enumerate(B):
            C[i + m] -= coef * x
        if 2 * L <= n:
            L, B, b, m = n + 1 - L, T, d, 1
        else:
            m += 1
    return trim(C), L


def solve(rows: list, rhs: list):
    """Exact Gaussian elimination. Returns one solution or None if inconsistent."""
    n_rows = len(rows)
    n_cols = len(rows[0]) if rows else 0
    A = [list(map(Fraction, r)) + [Fraction(v)] for r, v in zip(rows, rhs)]
    pivots = []
    r = 0
    for c in range(n_cols):
        piv = next((i for i in range(r, n_rows) if A[i][c] != 0), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        inv = 1 / A[r][c]
        A[r] = [x * inv for x in A[r]]
        for i in range(n_rows):
            if i != r and A[i][c] != 0:
                f = A[i][c]
                A[i] = [x - f * y for x, y in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
        if r == n_rows:
            break
    for i in range(r, n_rows):
        if A[i][-1] != 0:
            return None
    x = [Fraction(0)] * n_cols
    for i, c in enumerate(pivots):
        x[c] = A[i][-1]
    return x


def minpoly_of_power(den: Poly, D: int) -> Poly:
    """Minimal polynomial E(z), normalised E(0) = 1, of Y**D modulo ``den``."""
    m = deg(den)
    powers = [ONE]
    step = poly_divmod(shift(ONE, D), den)[1]
    while True:
        nxt = poly_divmod(mul(powers[-1], step), den)[1]
        K = len(powers)
        rows = [[p[i] if i < len(p) else 0 for p in powers] for i in range(m)]
        rhs = [nxt[i] if i < len(nxt) else 0 for i in range(m)]
        sol = solve(rows, rhs)
        if sol is not None:
            # z^K - sum(sol_i z^i)
            E = trim([-c for c in sol] + [Fraction(1)])
            return scale(E, 1 / E[0])
        powers.append(nxt)
        if K > m:  # pragma: no cover - the minimal polynomial has degree <= m
            raise ArithmeticError("minimal polynomial search failed")


def _squarefree(p: Poly) -> Poly:
    g = gcd(p, derivative(p))
    return exact_div(p, g) if deg(g) > 0 else p


def rational_roots(p: Poly):
    """Rational roots with multiplicity, or None unless ``p`` splits over Q.

    Candidates come from floating-point roots of the squarefree part and are
    confirmed exactly, so a returned factorisation is always correct.
    """
    if deg(p) <= 0:
        return {}
    sf = _squarefree(p)
    if deg(sf) == 1:
        cands = [-sf[0] / sf[1]]
    else:
        coeffs = [float(c) for c in reversed(sf)]
        if not all(math.isfinite(c) for c in coeffs):
            return None
        approx = np.roots(coeffs)
        cands = []
        for z in approx:
            if abs(z.imag) > 1e-6 * max(1.0, abs(z.real)):
                return None
            cands.append(Fraction(float(z.real)).limit_denominator(10**9))
    roots = {}
    rest = p
    for r in cands:
        if evaluate(sf, r) != 0:
            return None
        if r in roots:
            continue
        k = 0
        lin = (-r, Fraction(1))
        while True:
            q, rem = poly_divmod(rest, lin)
            if rem:
                break
            rest, k = q, k + 1
        roots[r] = k
    if deg(rest) != 0:
        return None
    return roots


def binomial_poly(l: int) -> Poly:
    """The polynomial n -> C(n + l - 1, l - 1)."""
    out = ONE
    for t in range(1, l):
        out = mul(out, (Fraction(t), Fraction(1)))
    return scale(out, Fraction(1, math.factorial(l - 1)))


def root_period(den: Poly, max_step: int):
    """Smallest D with every reciprocal root of ``den`` having a real D-th power.

    Found from floating-point root angles, so it is only a candidate; callers
    confirm it exactly. Returns None when no D <= max_step fits.
    """
    sf = _squarefree(den)
    if deg(sf) <= 0:
        return 1
    coeffs = [float(c) for c in reversed(sf)]
    if not all(math.isfinite(c) for c in coeffs):
        return None
    period = 1
    for r in np.roots(coeffs):
        theta = -np.angle(r) / math.pi  # angle of 1/r, in units of pi
        for d in range(1, max_step + 1):
            if abs(d * theta - round(d * theta)) < 1e-7:
                break
        else:
            return None
        period = period * d // math.gcd(period, d)
        if period > max_step:
            return None
    return period
