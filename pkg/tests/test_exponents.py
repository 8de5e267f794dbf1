import pytest
from hypothesis import given, strategies as st

from transpoly import OMEGA, Ordinal, Surinteger, below_gamma, parse_surint
from transpoly.errors import RepresentationLimit
from transpoly.exponents import (
    ArchOrdering,
    Ordering,
    _ord_add,
    omega_power,
    ord_cmp,
    si_arch_cmp,
    si_cmp,
)
from strategies import small_ints, surints

W = OMEGA


def test_ordinal_order_basics():
    assert Ordinal.of(3) < Ordinal.omega_power(1)
    assert Ordinal.omega_power(1, 5) < Ordinal.omega_power(2)
    assert ord_cmp(Ordinal.omega_power(Ordinal.omega_power(1)), Ordinal.omega_power(9)) is Ordering.GREATER


def test_ordinal_rejects_bad_terms():
    with pytest.raises(ValueError):
        Ordinal(((Ordinal.of(1), -1),))
    with pytest.raises(ValueError):
        Ordinal(((Ordinal.of(0), 1), (Ordinal.of(1), 1)))


def test_depth_cap():
    o = Ordinal.of(1)
    for _ in range(7):
        o = Ordinal.omega_power(o)
    with pytest.raises(RepresentationLimit):
        Ordinal.omega_power(o)


def test_recursive_ordinal_sum_absorbs():
    one, w = Ordinal.of(1), Ordinal.omega_power(1)
    assert _ord_add(one, w) == w
    assert _ord_add(w, one) == Ordinal(((Ordinal.of(1), 1), (Ordinal(), 1)))


def test_surinteger_cancellation():
    assert (W - 2) + 2 == W
    assert W * 3 - W * 3 == 0
    assert (W - 2).finite_part == -2 and (W - 2).base == W


def test_signs_follow_leading_coefficient():
    assert (W - 1000).sign() == 1
    assert (1000 - W).sign() == -1
    assert parse_surint("w^(w) - w + 3") > omega_power(1) * 50


def test_archimedean_classes():
    assert si_arch_cmp(W * 7 + 1, W) is ArchOrdering.SAME
    assert si_arch_cmp(Surinteger.of(5), W) is ArchOrdering.LOWER
    with pytest.raises(ValueError):
        si_arch_cmp(Surinteger.of(0), W)


@pytest.mark.parametrize(
    "a, eta, expected",
    [(Surinteger.of(10**6), 1, True), (W, 1, False), (W * 99, 2, True), (omega_power(2), 2, False)],
)
def test_below_gamma(a, eta, expected):
    assert below_gamma(a, eta) is expected


@given(surints, surints, surints)
def test_group_laws(a, b, c):
    assert a + b == b + a
    assert (a + b) + c == a + (b + c)
    assert a - a == 0
    assert si_cmp(a, b) is Ordering.of((a - b).sign())


@given(surints, surints, small_ints)
def test_order_is_translation_invariant(a, b, k):
    if a < b:
        assert a + k < b + k
        assert a * 3 < b * 3


@given(st.lists(surints, min_size=1, max_size=8))
def test_sort_is_total(xs):
    ys = sorted(xs)
    assert all(not (y < x) for x, y in zip(ys, ys[1:]))
