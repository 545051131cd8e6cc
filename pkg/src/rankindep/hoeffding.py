"""Quadrant counts, Hoeffding's D_n and the Blum-Kiefer-Rosenblatt B_n.

For each point ``(i, p[i])`` of a permutation, the quadrant counts are
the numbers of other points to the upper-left (a), upper-right (b),
lower-left (c) and lower-right (d).  Both statistics are simple sums
over these counts, so they cost O(n log n) overall.
"""

from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple

import numpy as np

from . import _kernels
from .errors import SampleTooSmallError
from .ranking import as_permutation

__all__ = [
    "QuadrantCounts",
    "quadrant_counts",
    "hoeffding_D",
    "hoeffding_D_exact",
    "bkr_B",
    "bkr_B_exact",
]


class QuadrantCounts(NamedTuple):
    """Per-point counts of other points NW (a), NE (b), SW (c), SE (d)."""

    a: np.ndarray
    b: np.ndarray
    c: np.ndarray
    d: np.ndarray


def quadrant_counts(p) -> QuadrantCounts:
    """Quadrant counts of every point of the permutation `p`.

    >>> quadrant_counts([2, 1]).a
    array([0, 1])
    """
    p = as_permutation(p)
    return QuadrantCounts(*_kernels.quadrant_counts_kernel(p))


def _numerators(p):
    d_w, d_f, b_w, b_f = _kernels.hoeffding_sums_kernel(p)
    return _kernels.unwrap(d_w, d_f), _kernels.unwrap(b_w, b_f)


def hoeffding_D_exact(p) -> Fraction:
    """Hoeffding's D_n as an exact rational."""
    p = as_permutation(p)
    n = p.shape[0]
    if n < 5:
        raise SampleTooSmallError(n, 5, "Hoeffding's D")
    num, _ = _numerators(p)
    return Fraction(num, n * (n - 1) * (n - 2) * (n - 3) * (n - 4))


def hoeffding_D(p) -> float:
    """Hoeffding's D_n of a ranking permutation.

    Unbiased for the population D, which is 1/30 for a monotone
    dependence and 0 under independence.  Finite-sample values can be
    slightly negative.

    Parameters
    ----------
    p : array_like
        Permutation of ``1..n`` with ``n >= 5``.

    Returns
    -------
    float
        ``sum(a(a-1)d(d-1) + b(b-1)c(c-1) - 2abcd) / (n(n-1)(n-2)(n-3)(n-4))``,
        computed from the exact integer numerator with one rounding.
    """
    return float(hoeffding_D_exact(p))


def bkr_B_exact(p) -> Fraction:
    p = as_permutation(p)
    n = p.shape[0]
    _, num = _numerators(p)
    return Fraction(num, n**5)


def bkr_B(p) -> float:
    """Blum-Kiefer-Rosenblatt statistic ``sum((a d - b c)**2) / n**5``."""
    return float(bkr_B_exact(p))
