from fractions import Fraction
from itertools import islice

import pytest
from hypothesis import given, settings

from transpoly import (
    OMEGA,
    ONE,
    ZERO,
    InfiniteTailUnderflow,
    NonDescendingInput,
    RecurrentRun,
    TermFamily,
    X,
    ZeroPolyError,
    family,
    from_terms,
    monomial,
    parse_poly,
)
from transpoly.config import using_limits
from transpoly.errors import RepresentationLimit
from transpoly.napoly import recurrent_run
from strategies import canonical_values, finite_below_omega2, infinite_families

W = OMEGA
ALT = family([1], -1, W - 2, 2, None)


def test_alternating_run_layout():
    (f,) = ALT.families
    assert f == TermFamily((Fraction(1),), Fraction(-1), W - 2, 2, None)
    assert [c for _, c in ALT.support_seq(4)] == [1, -1, 1, -1]
    assert [e for e, _ in ALT.support_seq(3)] == [W - 2, W - 4, W - 6]


def test_telescoping_product():
    assert (monomial(1, 2) + 1) * ALT == monomial(1, W)


def test_finite_runs_become_monomials():
    p = family([1], 1, 3, 1, 4)
    assert p == parse_poly("X^(3) + X^(2) + X + 1")
    assert all(f.length == 1 for f in p.families)


def test_polynomial_coefficients_survive_export():
    p = family([1, 2], 3, W * 2 + 1, 2, None)
    assert [c for _, c in p.support_seq(4)] == [1, 9, 45, 189]
    assert sum((f.to_poly() for f in p.families), ZERO) == p


def test_irrational_ratios_stay_recurrences():
    p = recurrent_run(W, [1], [1, -1, -1])  # Fibonacci weights
    (r,) = p.families
    assert isinstance(r, RecurrentRun)
    assert [c for _, c in p.support_seq(6)] == [1, 1, 2, 3, 5, 8]


def test_underflow_and_bad_input():
    with pytest.raises(InfiniteTailUnderflow):
        family([1], 1, 5, 1, None)
    with pytest.raises(InfiniteTailUnderflow):
        family([1], 1, 5, 2, 4)
    with pytest.raises(ValueError):
        monomial(1, -1)
    with pytest.raises(NonDescendingInput):
        from_terms([(1, 1), (2, 1)])
    with pytest.raises(ZeroPolyError):
        ZERO.degree()


def test_caps_raise_instead_of_truncating():
    with using_limits(max_den_degree=3):
        with pytest.raises(RepresentationLimit):
            family([1, 1, 1, 1], 2, W, 1, None)


def test_order_and_support_type():
    assert ONE < X < monomial(1, W) - monomial(100, 50)
    assert -X < ZERO
    assert str((monomial(1, W) + X + 1).support_order_type()) == "3"
    assert str((ALT + X).support_order_type()) == "w + 1"


def test_cursor_round_trip():
    assert from_terms(ALT.terms()) == ALT
    p = parse_poly("X^(w) - 3*X^(5) + 1/2")
    assert from_terms(list(p.terms())) == p


def test_subring_membership():
    assert (X + 1).in_subring(1)
    assert not monomial(1, W).in_subring(1)
    assert ALT.in_subring(2)


@given(canonical_values, canonical_values, canonical_values)
@settings(max_examples=40, deadline=None)
def test_ring_laws_on_infinite_values(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == ZERO


@given(canonical_values)
@settings(max_examples=60, deadline=None)
def test_families_resum_to_value(p):
    assert sum((f.to_poly() for f in p.families), ZERO) == p


@given(infinite_families)
@settings(max_examples=60, deadline=None)
def test_family_coefficients_match_closed_form(p):
    for f in p.families:
        if isinstance(f, TermFamily) and f.is_infinite:
            floor = f.start_exp - f.step * 5
            got = [t for t in islice(f.to_poly().terms(), 6) if t[0] >= floor]
            want = [(f.start_exp - f.step * n, f.coefficient(n)) for n in range(6)]
            assert got == [t for t in want if t[1]]

@given(finite_below_omega2, finite_below_omega2)
def test_order_is_sign_of_difference(a, b):
    assert (a < b) == ((b - a) > ZERO)
    assert (a < b) + (a == b) + (a > b) == 1
