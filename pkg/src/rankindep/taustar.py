"""The Bergsma-Dassios-Yanagimoto tau* and the refined Hoeffding R_n.

tau* is computed from four runs of the QUAD sweep, one on each of
``p``, ``reverse(p)``, ``inverse(p)`` and ``reverse(inverse(p))``.  Each
run keeps four sum-arrays, giving O(n log n) total time.  The integer
core is exact for any supported n; values are rounded once at the end.

With ``T_n = tau*/12`` the refined statistic follows from the identity
``T_n = D_n + 2 R_n``.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb

import numpy as np

from . import _kernels
from .errors import SampleTooSmallError
from .ranking import as_permutation

__all__ = [
    "quad",
    "tau_star",
    "tau_star_exact",
    "t_statistic",
    "refined_R",
    "refined_R_exact",
]


def quad(p) -> int:
    """Exact output of the QUAD sweep on `p`.

    Equals ``2#1324 + #1342 + 3#1423 + 2#1432 - #2143 + 2#2314 + 2#2413
    + #3412 + 2#4123 + #4132 + #4213`` where ``#s`` counts occurrences of
    the 4-pattern ``s`` in `p`.
    """
    p = as_permutation(p)
    r = _kernels.quad_kernel(p)
    return _kernels.unwrap(r[0], r[1])


def _reflections(p: np.ndarray):
    inv = np.empty_like(p)
    inv[p - 1] = np.arange(1, p.shape[0] + 1)
    return p[::-1].copy(), inv, inv[::-1].copy()


def _discordance_sum(p: np.ndarray, with_hoeffding: bool = False):
    """Sum of the four QUAD runs; optionally also the D_n numerator.

    The D_n numerator is a by-product of the first run (on `p` itself).
    """
    r = _kernels.quad_kernel(p, with_hoeffding)
    total = _kernels.unwrap(r[0], r[1])
    for q in _reflections(p):
        total += quad(q)
    if with_hoeffding:
        return total, _kernels.unwrap(r[2], r[3])
    return total


def _tau_from_sum(s: int, n: int) -> Fraction:
    c4 = comb(n, 4)
    # 2/3 - (s/4)/C(n, 4)
    return Fraction(8 * c4 - 3 * s, 12 * c4)


def tau_star_exact(p) -> Fraction:
    p = as_permutation(p)
    n = p.shape[0]
    if n < 4:
        raise SampleTooSmallError(n, 4, "tau*")
    return _tau_from_sum(_discordance_sum(p), n)


def tau_star(p) -> float:
    """Bergsma-Dassios-Yanagimoto tau* of a ranking permutation.

    Lies in ``[-1/3, 2/3]``: 2/3 for monotone data and close to 0 under
    independence.

    Parameters
    ----------
    p : array_like
        Permutation of ``1..n``, ``n >= 4``.
    """
    return float(tau_star_exact(p))


def t_statistic(p) -> float:
    """``T_n = tau*/12``."""
    return float(tau_star_exact(p) / 12)


def refined_R_exact(p) -> Fraction:
    p = as_permutation(p)
    n = p.shape[0]
    if n < 5:
        raise SampleTooSmallError(n, 5, "refined R")
    s, d_num = _discordance_sum(p, with_hoeffding=True)
    d = Fraction(d_num, n * (n - 1) * (n - 2) * (n - 3) * (n - 4))
    return (_tau_from_sum(s, n) / 12 - d) / 2


def refined_R(p) -> float:
    """Refined Hoeffding statistic ``R_n = (T_n - D_n) / 2``; needs n >= 5."""
    return float(refined_R_exact(p))
