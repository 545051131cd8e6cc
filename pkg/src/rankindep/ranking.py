"""Ranking permutations of paired samples and their reflections.

A sample ``(x_1, y_1), ..., (x_n, y_n)`` of continuous data is summarised
by the permutation ``p`` with ``p[rank(x_i)] = rank(y_i)``.  Permutations
are stored as 1-d ``int64`` arrays in one-line notation with values
``1..n``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal, Union

import numpy as np

from .errors import (
    InvalidPermutationError,
    LengthMismatchError,
    NonFiniteValueError,
    TiesPresentError,
)

__all__ = [
    "TiePolicy",
    "as_permutation",
    "rank_permutation",
    "inverse",
    "reverse",
    "random_permutation",
]

MAX_N = 2**31 - 1


@dataclass(frozen=True)
class TiePolicy:
    """How to treat duplicate values when ranking.

    ``mode="error"`` rejects ties.  ``mode="random"`` orders each group
    of tied values uniformly at random, reproducibly for a given ``seed``.
    """

    mode: Literal["error", "random"] = "error"
    seed: int = 0

    def __post_init__(self):
        if self.mode not in ("error", "random"):
            raise ValueError(f"unknown tie mode {self.mode!r}")
        if not 0 <= int(self.seed) < 2**64:
            raise ValueError("seed must fit in 64 unsigned bits")

    @classmethod
    def error(cls) -> "TiePolicy":
        return cls("error")

    @classmethod
    def random(cls, seed: int = 0) -> "TiePolicy":
        return cls("random", seed)


TieArg = Union[TiePolicy, str, None]


def _coerce_policy(policy: TieArg) -> TiePolicy:
    if policy is None:
        return TiePolicy()
    if isinstance(policy, str):
        return TiePolicy(policy)  # type: ignore[arg-type]
    return policy


def as_permutation(p, *, check: bool = True) -> np.ndarray:
    """Return `p` as an ``int64`` array, validating that it lies in S_n."""
    arr = np.asarray(p)
    if arr.ndim != 1:
        raise InvalidPermutationError("permutation must be one-dimensional")
    if arr.dtype.kind not in "iu":
        if arr.size and not np.all(np.equal(np.mod(arr, 1), 0)):
            raise InvalidPermutationError("permutation entries must be integers")
    arr = arr.astype(np.int64, copy=False)
    n = arr.shape[0]
    if n < 1:
        raise InvalidPermutationError("permutation must have n >= 1")
    if n > MAX_N:
        raise InvalidPermutationError(f"n = {n} exceeds the supported maximum")
    if check:
        if arr.min() < 1 or arr.max() > n:
            raise InvalidPermutationError("entries must lie in 1..n")
        seen = np.zeros(n + 1, dtype=bool)
        seen[arr] = True
        if not seen[1:].all():
            raise InvalidPermutationError("entries must be distinct")
    return arr


def _ranks(values: np.ndarray, which: str, policy: TiePolicy,
           rng: np.random.Generator | None) -> np.ndarray:
    n = values.shape[0]
    if policy.mode == "random":
        tiebreak = rng.permutation(n)
        order = np.lexsort((tiebreak, values))
    else:
        order = np.argsort(values, kind="stable")
        sv = values[order]
        dup = np.flatnonzero(sv[1:] == sv[:-1])
        if dup.size:
            k = dup[0]
            raise TiesPresentError((int(order[k]), int(order[k + 1])), which)
    ranks = np.empty(n, dtype=np.int64)
    ranks[order] = np.arange(1, n + 1)
    return ranks


def rank_permutation(xs, ys, policy: TieArg = None) -> np.ndarray:
    """Ranking permutation of paired samples.

    Parameters
    ----------
    xs, ys : array_like
        Equal-length sequences of finite reals.
    policy : TiePolicy or {"error", "random"}, optional
        Tie handling; rejecting ties is the default since the
        distribution-free null assumes continuous margins.

    Returns
    -------
    numpy.ndarray
        ``p`` with ``p[rank(xs[i]) - 1] == rank(ys[i])``.
    """
    policy = _coerce_policy(policy)
    x = np.asarray(xs, dtype=np.float64).ravel()
    y = np.asarray(ys, dtype=np.float64).ravel()
    if x.shape[0] != y.shape[0]:
        raise LengthMismatchError(x.shape[0], y.shape[0])
    n = x.shape[0]
    if n < 1:
        raise ValueError("need at least one observation")
    if n > MAX_N:
        raise ValueError(f"n = {n} exceeds the supported maximum")
    for arr, name in ((x, "x"), (y, "y")):
        bad = np.flatnonzero(~np.isfinite(arr))
        if bad.size:
            raise NonFiniteValueError(int(bad[0]), name)

    rng = None
    if policy.mode == "random":
        # independent child streams for the two coordinates
        rng_x, rng_y = np.random.default_rng(policy.seed).spawn(2)
    else:
        rng_x = rng_y = rng
    rx = _ranks(x, "x", policy, rng_x)
    ry = _ranks(y, "y", policy, rng_y)
    perm = np.empty(n, dtype=np.int64)
    perm[rx - 1] = ry
    return perm


def inverse(p) -> np.ndarray:
    """Inverse permutation, ``q[p[i] - 1] == i + 1``."""
    p = as_permutation(p)
    q = np.empty_like(p)
    q[p - 1] = np.arange(1, p.shape[0] + 1)
    return q


def reverse(p) -> np.ndarray:
    """Reversed one-line notation, ``q[i] == p[n - 1 - i]``."""
    return as_permutation(p)[::-1].copy()


def random_permutation(n: int, rng=None) -> np.ndarray:
    """Uniform random element of S_n."""
    rng = np.random.default_rng(rng)
    return rng.permutation(n).astype(np.int64) + 1
