import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from transpoly import (
    OMEGA,
    ONE,
    ZERO,
    X,
    BudgetExhausted,
    ZeroDivisorError,
    ZeroPolyError,
    divmod_trace,
    ext_gcd,
    family,
    ideal_member,
    is_root_poly,
    monomial,
    norm,
    parse_poly,
    verify_division,
    verify_factor,
    verify_split,
)
from transpoly.division import EXHAUSTED, naked_divmod
from transpoly.napoly import recurrent_run
import oracles
import randpoly
from strategies import seeds

W = OMEGA
P = parse_poly
ALT = family([1], -1, W - 2, 2, None)


@pytest.mark.parametrize("text, expected", [("1", 0), ("X^(w)", W), ("X^(5) + X^(2)", 5)])
def test_norm_is_degree(text, expected):
    assert norm(P(text)) == expected


def test_norm_of_zero():
    with pytest.raises(ZeroPolyError):
        norm(ZERO)


def test_classical_division():
    q, r = naked_divmod(P("X^(3) + 1"), P("X + 1"))
    assert (q, r) == (P("X^(2) - X + 1"), ZERO)


def test_limit_jump_recorded():
    t = divmod_trace(monomial(1, W), P("X^(2) + 1"), 100)
    assert [s.kind for s in t.steps] == ["successor"] * 4 + ["limit_jump"]
    assert sum((s.quotient_increment for s in t.steps), ZERO) == t.quotient == ALT
    assert t.steps[-1].remainder_after == t.remainder == ZERO
    assert (t.limit_jumps, t.successors, str(t.label)) == (1, 0, "w")


def test_successor_steps_after_a_jump():
    # the tail absorbs X^w, then X^3 + X^2 needs two more classical steps
    t = divmod_trace(monomial(1, W) + P("X^(3) + X^(2)"), P("X^(2) + 1"), 100)
    assert str(t.label) == "w + 2"
    assert verify_division(monomial(1, W) + P("X^(3) + X^(2)"), P("X^(2) + 1"), t.quotient, t.remainder)


def test_fit_rejected_until_exact():
    # a head that breaks the pattern: jump only when the remainder drops below the tail
    p = monomial(1, W) + monomial(5, W - 3)
    q = P("X^(2) + 1")
    t = divmod_trace(p, q, 200)
    assert not t.exhausted and t.remainder.is_zero()
    assert q * t.quotient == p


def test_higher_order_recurrence_quotient():
    q = P("X^(3) - X - 1")  # plastic-number recurrence, not a geometric run
    t = divmod_trace(monomial(1, W * 2), q, 200)
    assert t.remainder.is_zero() and t.limit_jumps == 1
    assert q * t.quotient == monomial(1, W * 2)


def test_budget_exhaustion_is_reported():
    t = divmod_trace(monomial(1, W), P("X^(2) + 1"), 3)
    assert t.exhausted and t.successor_steps == 3
    assert P("X^(2) + 1") * t.quotient + t.remainder == monomial(1, W)
    with pytest.raises(BudgetExhausted) as info:
        naked_divmod(monomial(1, W), P("X^(2) + 1"), 3)
    assert info.value.partial.exhausted


def test_zero_divisor():
    with pytest.raises(ZeroDivisorError):
        divmod_trace(ONE, ZERO)


def test_verify_division_examples():
    p = P("X^(w) + 3*X")
    assert verify_division(p, ONE, p, ZERO)
    assert verify_division(monomial(1, W), P("X^(2) + 1"), ALT, ZERO)
    assert not verify_division(P("X^(3)"), P("X^(2)"), X, ONE)


def test_factors_roots_splits():
    assert verify_factor(P("X^(w) + 1"), P("X^(w) + 1"), ONE)
    assert verify_factor(P("X^(2) - 1"), P("X + 1"), P("X - 1"))
    assert not verify_factor(P("X^(2) + 1"), P("X + 1"), P("X - 1"))
    assert is_root_poly(P("X + 3")) and is_root_poly(X)
    assert not is_root_poly(P("2*X + 3")) and not is_root_poly(P("X^(w) + 1"))
    assert verify_split(P("X^(2) - 1"), [P("X + 1"), P("X - 1")])
    assert verify_split(P("3*X^(2) - 3"), [P("X + 1"), P("X - 1")])
    assert not verify_split(P("X^(2) + 1"), [P("X + 1"), P("X - 1")])


def test_ideal_membership():
    assert ideal_member(ZERO, P("X + 7"), 10) is True
    assert ideal_member(monomial(1, W), P("X^(2) + 1"), 100) is True
    assert ideal_member(P("X^(2) + 1"), monomial(1, W), 100) is False
    assert ideal_member(monomial(1, W), P("X^(2) + 1"), 2) == EXHAUSTED


@pytest.mark.parametrize(
    "a, b, g",
    [("X^(2) - 1", "X + 1", "X + 1"), ("X^(2) + 1", "X", "1"), ("4*X^(2) - 4", "0", "X^(2) - 1")],
)
def test_ext_gcd_classical(a, b, g):
    a, b = P(a), P(b)
    got, u, v = ext_gcd(a, b)
    assert got == P(g)
    assert u * a + v * b == got


def test_ext_gcd_first_example():
    g, u, v = ext_gcd(P("X^(2) - 1"), P("X + 1"))
    assert (g, u, v) == (P("X + 1"), ZERO, ONE)


def test_ext_gcd_transfinite():
    m, a = P("X^(w) - 2"), P("X^(3) + X + 1")
    g, u, v = ext_gcd(m, a)
    assert g == ONE and u * m + v * a == ONE


def test_ext_gcd_errors():
    with pytest.raises(ZeroPolyError):
        ext_gcd(ZERO, ZERO)
    with pytest.raises(BudgetExhausted):
        ext_gcd(monomial(1, W), P("X^(2) + 1"), 2)


@given(seeds)
@settings(max_examples=80, deadline=None)
def test_matches_schoolbook_division(seed):
    rng = random.Random(seed)
    num, den = randpoly.classical(rng, 14), randpoly.classical(rng, 6)
    quo, rem = oracles.dense_divmod(num, den)
    q, r = naked_divmod(randpoly.from_dict(num), randpoly.from_dict(den))
    assert q == randpoly.from_dict(quo) and r == randpoly.from_dict(rem)


@given(seeds)
@settings(max_examples=40, deadline=None)
def test_uniqueness_with_infinite_quotients(seed):
    rng = random.Random(seed)
    q = randpoly.from_dict(randpoly.classical(rng, 4, terms=2)) + monomial(1, 5)
    r = randpoly.infinite_family(rng)
    s = randpoly.from_dict(randpoly.classical(rng, 4))
    t = divmod_trace(q * r + s, q, 256)
    assert not t.exhausted
    assert (t.quotient, t.remainder) == (r, s)


@given(st.integers(1, 6), st.integers(-4, 4).filter(bool), st.integers(0, 6))
@settings(deadline=None)
def test_two_term_divisors_telescope(d, c, extra):
    q = monomial(1, d + extra) + monomial(c, extra)
    p = monomial(1, W * 2 + 3)
    t = divmod_trace(p, q, 256)
    assert t.remainder.is_zero() and q * t.quotient == p
