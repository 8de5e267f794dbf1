"""Hypothesis strategies built on the seeded generators."""

import random

from hypothesis import strategies as st

import randpoly

seeds = st.integers(min_value=0, max_value=2**32 - 1)


def _from(gen):
    return seeds.map(lambda s: gen(random.Random(s)))


canonical_values = _from(randpoly.canonical_value)
finite_below_omega2 = _from(randpoly.finite_support)
infinite_families = _from(randpoly.infinite_family)
surints = _from(randpoly.surint)
small_ints = st.integers(min_value=-20, max_value=20)
