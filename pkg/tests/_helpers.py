"""Shared test strategies and corpora."""

import itertools

import numpy as np
from hypothesis import strategies as st


def all_perms(n):
    """Every permutation of 1..n as int64 arrays."""
    return [np.array(q, dtype=np.int64) for q in itertools.permutations(range(1, n + 1))]


@st.composite
def perms(draw, min_n=1, max_n=30):
    n = draw(st.integers(min_n, max_n))
    order = draw(st.permutations(list(range(1, n + 1))))
    return np.array(order, dtype=np.int64)
