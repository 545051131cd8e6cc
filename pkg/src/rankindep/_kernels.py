"""Compiled O(n log n) kernels.

Integer quantities grow like n**4 (D numerator, quad) or n**5 (B
numerator), beyond 64 bits for large n.  Every kernel therefore returns
a pair: the exact value modulo 2**64 (uint64 arithmetic wraps) and a
float64 shadow accurate to far better than 2**63.  `unwrap` recovers the
exact integer from the pair.
"""

from __future__ import annotations

import numba as nb
import numpy as np

_TWO64 = 2**64
_TWO64_F = float(_TWO64)
_U0 = np.uint64(0)
_U1 = np.uint64(1)
_U2 = np.uint64(2)


def unwrap(wrapped, approx: float) -> int:
    """Exact integer from its residue mod 2**64 and a float estimate."""
    r = int(wrapped)
    k = round((approx - r) / _TWO64_F)
    return r + k * _TWO64


@nb.njit(cache=True, inline="always")
def _unwrap_float(wrapped, approx):
    r = float(np.int64(wrapped))
    k = np.round((approx - r) / _TWO64_F)
    return r + k * _TWO64_F


@nb.njit(cache=True)
def quadrant_counts_kernel(perm):
    """Counts of other points NW, NE, SW, SE of each point ``(i, perm[i])``."""
    n = perm.shape[0]
    tree = np.zeros(n + 1, dtype=np.int32)
    a = np.empty(n, dtype=np.int64)
    b = np.empty(n, dtype=np.int64)
    c = np.empty(n, dtype=np.int64)
    d = np.empty(n, dtype=np.int64)
    for i in range(n):
        y = perm[i]
        s = np.int64(0)
        j = y
        while j > 0:
            s += tree[j]
            j -= j & -j
        j = y
        while j <= n:
            tree[j] += 1
            j += j & -j
        c[i] = s
        a[i] = i - s
        b[i] = (n - y) - a[i]
        d[i] = (y - 1) - s
    return a, b, c, d


@nb.njit(cache=True, inline="always")
def _hoeffding_terms(ai, bi, ci, di):
    # each of a(a-1), d(d-1), ad, ... is below n**2 and exact in int64
    aa = ai * (ai - 1)
    dd = di * (di - 1)
    bb = bi * (bi - 1)
    cc = ci * (ci - 1)
    ad = ai * di
    bc = bi * ci
    d_w = (np.uint64(aa) * np.uint64(dd) + np.uint64(bb) * np.uint64(cc)
           - _U2 * np.uint64(ad) * np.uint64(bc))
    d_f = float(aa) * float(dd) + float(bb) * float(cc) - 2.0 * float(ad) * float(bc)
    e = ad - bc
    ue = np.uint64(e) if e >= 0 else np.uint64(-e)
    return d_w, d_f, ue * ue, float(e) * float(e)


@nb.njit(cache=True)
def hoeffding_sums_kernel(perm):
    """Numerators of D_n and B_n as (wrapped, approx) pairs."""
    n = perm.shape[0]
    # counts never exceed n < 2**31; the narrow tree halves cache traffic
    tree = np.zeros(n + 1, dtype=np.int32)
    d_w = _U0
    d_f = 0.0
    b_w = _U0
    b_f = 0.0
    for i in range(n):
        y = perm[i]
        s = np.int64(0)
        j = y
        while j > 0:
            s += tree[j]
            j -= j & -j
        j = y
        while j <= n:
            tree[j] += 1
            j += j & -j
        ai = i - s
        tw, tf, ew, ef = _hoeffding_terms(ai, (n - y) - ai, s, (y - 1) - s)
        d_w += tw
        d_f += tf
        b_w += ew
        b_f += ef
    return d_w, d_f, b_w, b_f


@nb.njit(cache=True)
def quad_kernel(perm, with_hoeffding=False):
    """QUAD subroutine of the tau* algorithm, as a (wrapped, approx) pair.

    Four sum-arrays share one (n + 1, 4) tree so a tree walk touches one
    row per level.  Columns: 0 -> A, 1 -> A_u, 2 -> A_d, 3 -> A_ud.

    N_u at step x is the quadrant count c of point x, so with
    `with_hoeffding` the D_n and B_n numerators come out of the same
    sweep.  The return value is then ``(acc_w, acc_f, d_w, d_f, b_w, b_f)``
    and otherwise the same tuple with zero Hoeffding sums.

    N_udu can exceed 64 bits, so its float shadow is not read from the
    tree.  Summed over all steps, N_udu(x) equals the sum over x' of
    N_ud(x') times the number of later points above x', which is known
    at step x' from the quadrant identities.
    """
    n = perm.shape[0]
    tree = np.zeros((n + 1, 4), dtype=np.uint64)
    total_u = _U0
    acc_w = _U0
    acc_f = 0.0
    d_w = _U0
    d_f = 0.0
    b_w = _U0
    b_f = 0.0
    for x in range(1, n + 1):
        y = perm[x - 1]
        # cell y is still empty, so prefix sums at y cover values < y only
        s_a = _U0
        s_u = _U0
        s_d = _U0
        s_ud = _U0
        j = y
        while j > 0:
            s_a += tree[j, 0]
            s_u += tree[j, 1]
            s_d += tree[j, 2]
            s_ud += tree[j, 3]
            j -= j & -j
        ux = np.uint64(x)
        n_u = s_a
        n_d = ux - _U1 - s_a
        n_du = s_d
        n_ud = total_u - s_u
        n_udu = s_ud
        j = y
        while j <= n:
            tree[j, 0] += _U1
            tree[j, 1] += n_u
            tree[j, 2] += n_d
            tree[j, 3] += n_ud
            j += j & -j
        total_u += n_u
        acc_w += (_U2 * n_udu - n_du * n_d - n_ud * n_u
                  + (ux - _U2) * n_u * n_d)
        fu = float(n_u)
        fd = float(n_d)
        # later points above (x, y): (n - y) above overall, minus x - 1 - n_u
        # earlier ones above
        later_above = float(n - y - (x - 1) + np.int64(n_u))
        acc_f += (2.0 * float(n_ud) * later_above - float(n_du) * fd
                  - float(n_ud) * fu + float(x - 2) * fu * fd)
        if with_hoeffding:
            ci = np.int64(n_u)
            ai = np.int64(x - 1) - ci
            tw, tf, ew, ef = _hoeffding_terms(ai, (n - y) - ai, ci, (y - 1) - ci)
            d_w += tw
            d_f += tf
            b_w += ew
            b_f += ef
    return acc_w, acc_f, d_w, d_f, b_w, b_f


@nb.njit(cache=True)
def _reflections(perm):
    n = perm.shape[0]
    rev = perm[::-1].copy()
    inv = np.empty(n, dtype=np.int64)
    for i in range(n):
        inv[perm[i] - 1] = i + 1
    revinv = inv[::-1].copy()
    return rev, inv, revinv


@nb.njit(cache=True)
def tau_star_sum_float(perm):
    """Sum of the four QUAD calls, rounded to float64."""
    rev, inv, revinv = _reflections(perm)
    total = 0.0
    for q in (perm, rev, inv, revinv):
        r = quad_kernel(q)
        total += _unwrap_float(r[0], r[1])
    return total


@nb.njit(cache=True)
def batch_statistics(perms):
    """D_n, B_n and tau* (float64) for each row of a 2-d permutation array.

    Rows must be permutations of 1..n with n >= 5.  Used for null
    simulations where the single-rounding exact path is unnecessary.
    """
    m, n = perms.shape
    out_d = np.empty(m)
    out_b = np.empty(m)
    out_t = np.empty(m)
    fn = float(n)
    d_den = fn * (fn - 1.0) * (fn - 2.0) * (fn - 3.0) * (fn - 4.0)
    c4 = fn * (fn - 1.0) * (fn - 2.0) * (fn - 3.0) / 24.0
    b_den = fn ** 5
    for r in range(m):
        p = perms[r]
        # the first QUAD run also yields the D_n and B_n numerators
        acc_w, acc_f, d_w, d_f, b_w, b_f = quad_kernel(p, True)
        out_d[r] = _unwrap_float(d_w, d_f) / d_den
        out_b[r] = _unwrap_float(b_w, b_f) / b_den
        rev, inv, revinv = _reflections(p)
        s = _unwrap_float(acc_w, acc_f)
        for q in (rev, inv, revinv):
            res = quad_kernel(q)
            s += _unwrap_float(res[0], res[1])
        out_t[r] = 2.0 / 3.0 - 0.25 * s / c4
    return out_d, out_b, out_t


@nb.njit(cache=True)
def batch_tau_star(perms):
    m, n = perms.shape
    out = np.empty(m)
    fn = float(n)
    c4 = fn * (fn - 1.0) * (fn - 2.0) * (fn - 3.0) / 24.0
    for r in range(m):
        out[r] = 2.0 / 3.0 - 0.25 * tau_star_sum_float(perms[r]) / c4
    return out
