"""Brute-force reference implementations by subset enumeration.

Everything here is polynomial but slow (O(n^4) or O(n^5)) and exists to
check the fast paths.  Results are exact `fractions.Fraction` or `int`
values.  Size guards raise instead of truncating.
"""

from __future__ import annotations

from fractions import Fraction
import functools
from itertools import chain, combinations, permutations
from math import comb

import numpy as np

from .errors import SampleTooSmallError, TooLargeForOracleError
from .ranking import as_permutation

__all__ = [
    "CONCORDANT",
    "DISCORDANT",
    "QUAD_COEFFICIENTS",
    "HOEFFDING_PLUS",
    "HOEFFDING_MINUS",
    "pattern_of",
    "count_pattern",
    "pattern_counts",
    "tau_star_bruteforce",
    "quad_pattern_combination",
    "hoeffding_D_bruteforce",
    "quadrant_counts_bruteforce",
    "bkr_B_bruteforce",
]

TAU_MAX_N = 200
QUAD_MAX_N = 200
HOEFFDING_MAX_N = 60


def _pat(s: str) -> tuple[int, ...]:
    return tuple(int(ch) for ch in s)


CONCORDANT = frozenset(
    _pat(s) for s in ("1234", "1243", "2134", "2143", "3412", "3421", "4312", "4321")
)
DISCORDANT = frozenset(set(permutations(range(1, 5))) - CONCORDANT)

QUAD_COEFFICIENTS = {
    _pat("1324"): 2,
    _pat("1342"): 1,
    _pat("1423"): 3,
    _pat("1432"): 2,
    _pat("2143"): -1,
    _pat("2314"): 2,
    _pat("2413"): 2,
    _pat("3412"): 1,
    _pat("4123"): 2,
    _pat("4132"): 1,
    _pat("4213"): 1,
}


def _hoeffding_classes():
    plus, minus = set(), set()
    for sigma in permutations(range(1, 6)):
        if sigma[2] != 3:
            continue
        left, right = set(sigma[:2]), set(sigma[3:])
        if (left, right) in (({1, 2}, {4, 5}), ({4, 5}, {1, 2})):
            plus.add(sigma)
        else:
            minus.add(sigma)
    return frozenset(plus), frozenset(minus)


HOEFFDING_PLUS, HOEFFDING_MINUS = _hoeffding_classes()
assert len(HOEFFDING_PLUS) == 8 and len(HOEFFDING_MINUS) == 16


def pattern_of(values) -> tuple[int, ...]:
    """Order-isomorphic pattern of a sequence of distinct values.

    >>> pattern_of([4, 3])
    (2, 1)
    """
    vals = list(values)
    order = sorted(range(len(vals)), key=vals.__getitem__)
    pat = [0] * len(vals)
    for r, i in enumerate(order, start=1):
        pat[i] = r
    return tuple(pat)


_VECTOR_LIMIT = 6_000_000  # subsets enumerated as one index array


@functools.lru_cache(maxsize=8)
def _subset_index(n: int, k: int) -> np.ndarray:
    flat = np.fromiter(chain.from_iterable(combinations(range(n), k)),
                       dtype=np.int16, count=comb(n, k) * k)
    out = flat.reshape(-1, k)
    out.setflags(write=False)
    return out


@functools.lru_cache(maxsize=4)
def _subset_columns(n: int, k: int) -> np.ndarray:
    out = np.ascontiguousarray(_subset_index(n, k).T)
    out.setflags(write=False)
    return out


def _pattern_codes(p: np.ndarray, k: int) -> np.ndarray:
    """Base-k code of the pattern of every k-subset of positions."""
    vals = p[_subset_index(p.shape[0], k)]
    ranks = np.zeros(vals.shape, dtype=np.int64)
    for i in range(k):
        for j in range(k):
            if i != j:
                ranks[:, i] += vals[:, j] < vals[:, i]
    weights = k ** np.arange(k - 1, -1, -1, dtype=np.int64)
    return ranks @ weights


def _decode(code: int, k: int) -> tuple[int, ...]:
    digits = []
    for _ in range(k):
        code, r = divmod(code, k)
        digits.append(r + 1)
    return tuple(reversed(digits))


def pattern_counts(p, k: int) -> dict[tuple[int, ...], int]:
    """Occurrence counts of every k-pattern present in `p`."""
    p = as_permutation(p)
    n = p.shape[0]
    counts: dict[tuple[int, ...], int] = {}
    if k > n:
        return counts
    if comb(n, k) <= _VECTOR_LIMIT and k > 1:
        codes = np.bincount(_pattern_codes(p, k), minlength=k**k)
        for code in np.flatnonzero(codes):
            counts[_decode(int(code), k)] = int(codes[code])
        return counts
    for sub in combinations(p.tolist(), k):
        pat = pattern_of(sub)
        counts[pat] = counts.get(pat, 0) + 1
    return counts


def count_pattern(p, sigma) -> int:
    """Number of k-subsets of positions of `p` inducing `sigma`."""
    sigma = tuple(int(v) for v in sigma)
    return pattern_counts(p, len(sigma)).get(sigma, 0)


def _guard(n: int, lo: int, hi: int, what: str) -> None:
    if n < lo:
        raise SampleTooSmallError(n, lo, what)
    if n > hi:
        raise TooLargeForOracleError(n, hi)


def tau_star_bruteforce(p) -> Fraction:
    """tau* = 12 T_n by classifying every 4-subset as concordant or not."""
    p = as_permutation(p)
    n = p.shape[0]
    _guard(n, 4, TAU_MAX_N, "tau*")
    conc = 0
    for pat, c in pattern_counts(p, 4).items():
        if pat in CONCORDANT:
            conc += c
    disc = comb(n, 4) - conc
    t = (Fraction(conc, 18) - Fraction(disc, 36)) / comb(n, 4)
    return 12 * t


def quad_pattern_combination(p) -> int:
    """The 11-term pattern combination computed by the QUAD subroutine."""
    p = as_permutation(p)
    n = p.shape[0]
    if n > QUAD_MAX_N:
        raise TooLargeForOracleError(n, QUAD_MAX_N)
    if n < 4:
        return 0
    counts = pattern_counts(p, 4)
    return sum(coef * counts.get(pat, 0) for pat, coef in QUAD_COEFFICIENTS.items())


def _hoeffding_kernel_sum(p: np.ndarray) -> int:
    # only the middle point's rank and the side of each outer pair matter
    cols = _subset_columns(p.shape[0], 5)
    v = p.astype(np.int16)
    mid = v[cols[2]]
    b0, b1 = v[cols[0]] < mid, v[cols[1]] < mid
    b3, b4 = v[cols[3]] < mid, v[cols[4]] < mid
    nb = b0.astype(np.int8) + b1 + b3 + b4
    centred = nb == 2
    split = centred & (b0 == b1)
    return 4 * int(np.count_nonzero(split)) - 2 * int(np.count_nonzero(centred & ~split))


def hoeffding_D_bruteforce(p) -> Fraction:
    """D_n from its 5-pattern representation."""
    p = as_permutation(p)
    n = p.shape[0]
    _guard(n, 5, HOEFFDING_MAX_N, "Hoeffding's D")
    if comb(n, 5) <= _VECTOR_LIMIT:
        total = _hoeffding_kernel_sum(p)
    else:
        total = 0
        for pat, c in pattern_counts(p, 5).items():
            if pat[2] == 3:
                total += (4 if pat in HOEFFDING_PLUS else -2) * c
    return Fraction(total, n * (n - 1) * (n - 2) * (n - 3) * (n - 4))


def quadrant_counts_bruteforce(p):
    """Quadrant counts ``(a, b, c, d)`` by direct O(n^2) comparison."""
    p = as_permutation(p)
    n = p.shape[0]
    i = np.arange(n)
    left = i[None, :] < i[:, None]
    right = i[None, :] > i[:, None]
    above = p[None, :] > p[:, None]
    below = p[None, :] < p[:, None]
    a = (left & above).sum(axis=1)
    b = (right & above).sum(axis=1)
    c = (left & below).sum(axis=1)
    d = (right & below).sum(axis=1)
    return a, b, c, d


def bkr_B_bruteforce(p) -> Fraction:
    p = as_permutation(p)
    n = p.shape[0]
    a, b, c, d = (v.tolist() for v in quadrant_counts_bruteforce(p))
    s = sum((ai * di - bi * ci) ** 2 for ai, bi, ci, di in zip(a, b, c, d))
    return Fraction(s, n**5)
