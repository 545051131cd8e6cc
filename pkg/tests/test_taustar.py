from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from _helpers import all_perms, perms
from rankindep import _kernels
from rankindep.errors import SampleTooSmallError
from rankindep.hoeffding import hoeffding_D_exact, quadrant_counts
from rankindep.nulldist import null_statistics
from rankindep.oracle import quad_pattern_combination, tau_star_bruteforce
from rankindep.ranking import inverse, reverse
from rankindep.sumarray import SumArray
from rankindep.taustar import (
    quad,
    refined_R,
    refined_R_exact,
    t_statistic,
    tau_star,
    tau_star_exact,
)


def quad_reference(p):
    """The four-array sweep written out with SumArray and Python ints."""
    p = [int(v) for v in p]
    n = len(p)
    A, Au, Ad, Aud = (SumArray(n) for _ in range(4))
    total = 0
    for x, y in enumerate(p, start=1):
        n_u = A.prefix_sum(y)
        n_d = x - 1 - n_u
        n_ud = Au.suffix_sum(y)
        n_du = Ad.prefix_sum(y)
        n_udu = Aud.prefix_sum(y)
        total += 2 * n_udu - n_du * n_d - n_ud * n_u + (x - 2) * n_u * n_d
        A.assign(y, 1)
        Au.assign(y, n_u)
        Ad.assign(y, n_d)
        Aud.assign(y, n_ud)
    return total


@pytest.mark.parametrize("p, expected", [
    ([1, 2, 3, 4, 5], 0),
    ([1, 3, 2, 4], 2),
    ([4, 2, 3, 1], 0),
    ([2, 1, 4, 3], -1),
    ([1], 0),
    ([2, 1], 0),
])
def test_quad_examples(p, expected):
    assert quad(p) == expected


@pytest.mark.parametrize("p, expected", [
    ([1, 2, 3, 4], Fraction(2, 3)),
    ([1, 3, 2, 4], Fraction(-1, 3)),
    ([4, 3, 2, 1], Fraction(2, 3)),
    ([2, 1, 4, 3], Fraction(2, 3)),
])
def test_tau_star_examples(p, expected):
    assert tau_star_exact(p) == expected
    assert t_statistic(p) == float(expected / 12)


def test_refined_examples():
    assert refined_R_exact([1, 2, 3, 4, 5]) == Fraction(1, 90)
    p = [1, 4, 2, 5, 3]
    assert hoeffding_D_exact(p) == 0
    assert refined_R_exact(p) == tau_star_bruteforce(p) / 24


@pytest.mark.parametrize("p", [[1], [2, 1], [1, 3, 2]])
def test_tau_star_needs_four(p):
    with pytest.raises(SampleTooSmallError):
        tau_star(p)


def test_refined_needs_five():
    for p in all_perms(4):
        with pytest.raises(SampleTooSmallError):
            refined_R(p)


@given(perms(max_n=40))
def test_quad_matches_sumarray_reference(p):
    assert quad(p) == quad_reference(p)


def test_quad_reference_moderate_n():
    p = np.random.default_rng(2).permutation(3000) + 1
    assert quad(p) == quad_reference(p)


@pytest.mark.parametrize("n", range(1, 7))
def test_quad_lemma_exhaustive(n):
    for p in all_perms(n):
        assert quad(p) == quad_pattern_combination(p)


@given(perms(min_n=4, max_n=30))
def test_tau_star_matches_oracle(p):
    assert tau_star_exact(p) == tau_star_bruteforce(p)


@given(perms(min_n=4, max_n=200))
def test_symmetry_and_range(p):
    t = tau_star_exact(p)
    assert Fraction(-1, 3) <= t <= Fraction(2, 3)
    assert tau_star_exact(reverse(p)) == t
    assert tau_star_exact(inverse(p)) == t


@given(perms(min_n=5, max_n=60))
def test_decomposition_identity(p):
    assert tau_star_exact(p) / 12 == hoeffding_D_exact(p) + 2 * refined_R_exact(p)


@pytest.mark.parametrize("n", [4, 10, 1000, 100_000])
def test_monotone_values(n):
    p = np.arange(1, n + 1)
    assert tau_star(p) == 2 / 3
    assert tau_star(p[::-1].copy()) == 2 / 3
    if n >= 5:
        assert refined_R_exact(p) == Fraction(1, 90)


# float(v) rounds by at most 2**47 here, so the total error stays well inside 2**63
@given(st.integers(-2**100, 2**100), st.floats(-2**60, 2**60))
def test_unwrap_recovers_integer(v, err):
    wrapped = np.uint64(v % 2**64)
    approx = float(v) + err
    assert _kernels.unwrap(wrapped, approx) == v


def test_float_path_matches_exact():
    rng = np.random.default_rng(9)
    for n in (5, 50, 4000):
        p = rng.permutation(n) + 1
        assert _kernels.batch_tau_star(p[None, :])[0] == pytest.approx(
            tau_star(p), rel=1e-12, abs=1e-15)


def test_wide_numerator_is_exact():
    # the Hoeffding numerator passes 2**64 here; compare with Python ints
    n = 100_000
    p = np.random.default_rng(4).permutation(n) + 1
    a, b, c, d = (v.astype(object) for v in quadrant_counts(p))
    num = int(np.sum(a * (a - 1) * d * (d - 1) + b * (b - 1) * c * (c - 1) - 2 * a * b * c * d))
    assert hoeffding_D_exact(p) == Fraction(num, n * (n - 1) * (n - 2) * (n - 3) * (n - 4))


@pytest.mark.slow
@pytest.mark.parametrize("n", [100, 1000])
def test_t_unbiased_under_null(n):
    t = null_statistics(n, 100_000, seed=n)["taustar"] / 12
    se = t.std(ddof=1) / np.sqrt(t.size)
    assert abs(t.mean()) < 4 * se
