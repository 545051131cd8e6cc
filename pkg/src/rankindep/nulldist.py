"""Null distributions and p-values.

Under independence ``n D_n``, ``n R_n`` and ``n T_n / 3`` share the limit
law ``L = sum_{j,k} (Z_jk**2 - 1) / (pi**4 j**2 k**2)`` with iid standard
normal ``Z_jk``.  Asymptotic p-values come from a cached, sorted Monte
Carlo sample of a truncation of ``L``.  Permutation p-values resample
uniform permutations, which is exact in distribution at every n.
"""

from __future__ import annotations

import functools
import math
import os
import struct
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .errors import NonFiniteStatError, SampleTooSmallError
from .ranking import as_permutation

__all__ = [
    "NullDistSpec",
    "NullLaw",
    "limit_eigenvalues",
    "sample_limit_law",
    "limit_law",
    "asymptotic_pvalue",
    "null_statistics",
    "permutation_null",
    "permutation_pvalue",
    "LIMIT_VARIANCE",
    "STATISTICS",
]

#: Variance of the untruncated limit law, ``2 * (zeta(4) / pi**4)**2``.
LIMIT_VARIANCE = 2.0 / 8100.0

STATISTICS = ("hoeffding", "bkr", "refined", "taustar")

_CACHE_MAGIC = b"NDCACHE1"


@dataclass(frozen=True)
class NullDistSpec:
    """Truncation and Monte Carlo settings for the limit law.

    Attributes
    ----------
    J, K : int
        The double sum runs over ``j <= J`` and ``k <= K``.
    mc_samples : int
        Size of the Monte Carlo sample behind asymptotic p-values.
    seed : int
        Seed of the Monte Carlo stream.
    exact_products : int
        Eigenvalue groups with ``j*k`` up to this bound are drawn exactly
        as scaled chi-squares; the remaining (tiny) terms are summed as a
        single normal with the same mean and variance.
    """

    J: int = 100
    K: int = 100
    mc_samples: int = 2_000_000
    seed: int = 0
    exact_products: int = 32

    def __post_init__(self):
        if self.J < 1 or self.K < 1:
            raise ValueError("J and K must be positive")
        if self.mc_samples < 1:
            raise ValueError("mc_samples must be positive")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must fit in 64 unsigned bits")

    @property
    def eigenvalues(self) -> np.ndarray:
        return limit_eigenvalues(self)


def limit_eigenvalues(spec: NullDistSpec) -> np.ndarray:
    """Weights ``1/(pi^4 j^2 k^2)``, j-major order, length ``J*K``."""
    a = 1.0 / (np.pi**2 * np.arange(1, spec.J + 1, dtype=np.float64) ** 2)
    b = 1.0 / (np.pi**2 * np.arange(1, spec.K + 1, dtype=np.float64) ** 2)
    return np.outer(a, b).ravel()


def _product_groups(spec: NullDistSpec):
    """Distinct products ``m = j*k`` with their multiplicities in the grid."""
    j = np.arange(1, spec.J + 1)[:, None]
    k = np.arange(1, spec.K + 1)[None, :]
    prods = (j * k).ravel()
    m, mult = np.unique(prods, return_counts=True)
    return m, mult


def sample_limit_law(spec: NullDistSpec, count: int, *, seed=None,
                     method: str = "grouped") -> np.ndarray:
    """Draws of ``sum_{j<=J, k<=K} lambda_jk (Z_jk**2 - 1)``.

    Parameters
    ----------
    spec : NullDistSpec
    count : int
        Number of draws.
    seed : int, optional
        Overrides ``spec.seed``.
    method : {"grouped", "exact"}
        ``"exact"`` draws all ``J*K`` normals per sample, which is only
        practical for small grids.  ``"grouped"`` draws each set of equal
        eigenvalues as one chi-square with matching degrees of freedom and
        replaces the small-eigenvalue remainder by a normal with the same
        mean (0) and variance.
    """
    if count < 1:
        raise ValueError("count must be positive")
    rng = np.random.default_rng(spec.seed if seed is None else seed)
    if method == "exact":
        lam = limit_eigenvalues(spec)
        out = np.empty(count)
        chunk = max(1, 2_000_000 // lam.size)
        for start in range(0, count, chunk):
            stop = min(count, start + chunk)
            z = rng.standard_normal((stop - start, lam.size))
            out[start:stop] = (z * z - 1.0) @ lam
        return out
    if method != "grouped":
        raise ValueError(f"unknown method {method!r}")

    m, mult = _product_groups(spec)
    lam = 1.0 / (np.pi**4 * m.astype(np.float64) ** 2)
    head = m <= spec.exact_products
    out = np.zeros(count)
    for lam_m, df in zip(lam[head], mult[head]):
        out += lam_m * (rng.chisquare(df, size=count) - df)
    tail_var = 2.0 * float(np.sum(mult[~head] * lam[~head] ** 2))
    if tail_var > 0:
        out += math.sqrt(tail_var) * rng.standard_normal(count)
    return out


class NullLaw:
    """Sorted Monte Carlo sample of the truncated limit law.

    Right-tail p-values are plus-one smoothed,
    ``(1 + #{samples >= s}) / (1 + mc_samples)``.
    """

    def __init__(self, spec: NullDistSpec, samples: np.ndarray | None = None):
        self.spec = spec
        if samples is None:
            samples = sample_limit_law(spec, spec.mc_samples)
        samples = np.sort(np.asarray(samples, dtype=np.float64))
        samples.setflags(write=False)
        self.samples = samples

    def __len__(self) -> int:
        return self.samples.shape[0]

    def pvalue(self, scaled_stat):
        s = np.asarray(scaled_stat, dtype=np.float64)
        if not np.all(np.isfinite(s)):
            raise NonFiniteStatError("scaled statistic must be finite")
        m = self.samples.shape[0]
        above = m - np.searchsorted(self.samples, s, side="left")
        p = (1.0 + above) / (1.0 + m)
        return float(p) if p.ndim == 0 else p

    def save(self, path) -> None:
        """Write the cache file: magic, J and K as little-endian uint32,
        then the sorted samples as little-endian float64."""
        with open(path, "wb") as fh:
            fh.write(_CACHE_MAGIC)
            fh.write(struct.pack("<II", self.spec.J, self.spec.K))
            fh.write(self.samples.astype("<f8").tobytes())

    @classmethod
    def load(cls, path, spec: NullDistSpec | None = None) -> "NullLaw":
        with open(path, "rb") as fh:
            header = fh.read(16)
            if len(header) != 16 or header[:8] != _CACHE_MAGIC:
                raise ValueError(f"{path}: not a null-law cache file")
            J, K = struct.unpack("<II", header[8:])
            data = np.frombuffer(fh.read(), dtype="<f8")
        if data.size == 0:
            raise ValueError(f"{path}: cache file holds no samples")
        if spec is None:
            spec = NullDistSpec(J=J, K=K, mc_samples=data.size)
        elif (spec.J, spec.K) != (J, K):
            raise ValueError(f"{path}: cache built for J={J}, K={K}")
        if np.any(np.diff(data) < 0):
            raise ValueError(f"{path}: samples are not sorted")
        return cls(spec, data.astype(np.float64))


@functools.lru_cache(maxsize=4)
def _cached_law(spec: NullDistSpec) -> NullLaw:
    return NullLaw(spec)


def limit_law(spec: NullDistSpec | None = None, cache_path=None) -> NullLaw:
    """Process-wide cached `NullLaw`, optionally backed by a cache file.

    With `cache_path`, an existing file with matching J, K is read;
    otherwise the sample is generated and written there.
    """
    spec = spec or NullDistSpec()
    if cache_path is None:
        return _cached_law(spec)
    if os.path.exists(cache_path):
        try:
            return NullLaw.load(cache_path, spec)
        except ValueError:
            pass
    law = _cached_law(spec)
    law.save(cache_path)
    return law


def asymptotic_pvalue(scaled_stat, spec: NullDistSpec | None = None):
    """Right-tail probability of the limit law at `scaled_stat`.

    `scaled_stat` is ``n*D_n``, ``n*R_n`` or ``n*T_n/3`` (``= n*tau*/36``).
    """
    return limit_law(spec).pvalue(scaled_stat)


def _perm_chunks(n: int, count: int, seed):
    """Uniform random permutations of size `n` in row blocks."""
    rng = np.random.default_rng(seed)
    base = np.arange(1, n + 1, dtype=np.int64)
    step = max(1, 4_000_000 // n)
    for start in range(0, count, step):
        stop = min(count, start + step)
        perms = rng.permuted(np.broadcast_to(base, (stop - start, n)), axis=1)
        yield start, stop, np.ascontiguousarray(perms)


def null_statistics(n: int, count: int, seed=None) -> dict[str, np.ndarray]:
    """Statistics of `count` uniform random permutations of size `n`.

    Returns raw (unscaled) values keyed by ``"hoeffding"``, ``"bkr"``,
    ``"refined"`` and ``"taustar"``.
    """
    if n < 5:
        raise SampleTooSmallError(n, 5, "null simulation")
    d = np.empty(count)
    b = np.empty(count)
    t = np.empty(count)
    for start, stop, perms in _perm_chunks(n, count, seed):
        d[start:stop], b[start:stop], t[start:stop] = _kernels.batch_statistics(perms)
    return {
        "hoeffding": d,
        "bkr": b,
        "refined": (t / 12.0 - d) / 2.0,
        "taustar": t,
    }


@functools.lru_cache(maxsize=16)
def _permutation_null(stat: str, n: int, resamples: int, seed: int) -> np.ndarray:
    if stat == "taustar":
        values = np.empty(resamples)
        for start, stop, perms in _perm_chunks(n, resamples, seed):
            values[start:stop] = _kernels.batch_tau_star(perms)
    else:
        values = null_statistics(n, resamples, seed)[stat]
    values = np.sort(values)
    values.setflags(write=False)
    return values


def permutation_null(stat: str, n: int, resamples: int, seed: int = 0) -> np.ndarray:
    """Sorted resampled null values of `stat` at sample size `n` (cached)."""
    if stat not in STATISTICS:
        raise ValueError(f"unknown statistic {stat!r}; expected one of {STATISTICS}")
    if resamples < 1:
        raise ValueError("resamples must be >= 1")
    return _permutation_null(stat, int(n), int(resamples), int(seed))


def _observed(stat: str, p: np.ndarray) -> float:
    # same float path as the null sample, so equal permutations compare equal
    if stat == "taustar":
        return float(_kernels.batch_tau_star(p[None, :])[0])
    d, b, t = _kernels.batch_statistics(p[None, :])
    return {
        "hoeffding": d[0],
        "bkr": b[0],
        "refined": (t[0] / 12.0 - d[0]) / 2.0,
    }[stat]


def permutation_pvalue(stat: str, p, resamples: int = 999, seed: int = 0) -> float:
    """Resampling p-value ``(1 + #{null >= observed}) / (1 + resamples)``.

    Large values of every statistic indicate dependence.  The null sample
    depends only on ``(stat, n, resamples, seed)`` and is shared between
    calls.
    """
    p = as_permutation(p)
    n = p.shape[0]
    minimum = 4 if stat == "taustar" else 5
    if n < minimum:
        raise SampleTooSmallError(n, minimum, f"{stat} permutation test")
    null = permutation_null(stat, n, resamples, seed)
    obs = _observed(stat, p)
    above = null.shape[0] - np.searchsorted(null, obs, side="left")
    return float((1 + above) / (1 + resamples))
