"""Samplers for independent, monotone and Hoeffding-fooling data.

The fooling samplers produce dependent pairs with uniform margins on
which Hoeffding's population D vanishes, so the classical test has no
power against them while tau* and the refined statistic do.

Every sampler is deterministic per ``seed`` and returns values in [0, 1].
``mirror=True`` applies the random reflection ``x -> (1 +/- x)/2`` with an
independent fair sign per point.  This keeps the ranks of ``+/- x`` and
additionally hides the dependence from Spearman's rho and Kendall's tau.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

__all__ = [
    "SampleSet",
    "GENERATORS",
    "generate",
    "sample_independent",
    "sample_monotone",
    "sample_yanagimoto",
    "sample_hyperbola",
    "sample_binary_expansion",
    "yanagimoto_map",
    "hyperbola_map",
    "first_run_length",
]


@dataclass(frozen=True)
class SampleSet:
    xs: np.ndarray
    ys: np.ndarray
    meta: dict = field(default_factory=dict)

    def __len__(self) -> int:
        return self.xs.shape[0]

    def __iter__(self):
        return iter((self.xs, self.ys))


def _finish(name, seed, xs, ys, rng, mirror):
    if mirror:
        sign = rng.integers(0, 2, size=xs.shape[0]) * 2 - 1
        xs = (1.0 + sign * xs) / 2.0
    return SampleSet(xs, ys, {"generator": name, "seed": seed, "mirror": mirror})


def _check_n(n):
    if n < 1:
        raise ValueError("n must be positive")


def sample_independent(n: int, seed=None, mirror: bool = False) -> SampleSet:
    """Independent uniform pairs (the null model)."""
    _check_n(n)
    rng = np.random.default_rng(seed)
    xs = rng.random(n)
    ys = rng.random(n)
    return _finish("independent", seed, xs, ys, rng, mirror)


def sample_monotone(n: int, seed=None, mirror: bool = False) -> SampleSet:
    """``y = x`` with uniform x."""
    _check_n(n)
    rng = np.random.default_rng(seed)
    xs = rng.random(n)
    return _finish("monotone", seed, xs, xs.copy(), rng, mirror)


def yanagimoto_map(x, b):
    """``min(b, x/2)`` where ``x > b``, else ``max(b, (x+1)/2)``."""
    x = np.asarray(x, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    return np.where(x > b, np.minimum(b, x / 2.0), np.maximum(b, (x + 1.0) / 2.0))


def sample_yanagimoto(n: int, seed=None, mirror: bool = False) -> SampleSet:
    """Uniform square with two triangles' mass pushed onto their diagonals.

    ``x, b ~ U(0,1)`` independent and ``y = yanagimoto_map(x, b)``.
    """
    _check_n(n)
    rng = np.random.default_rng(seed)
    xs = rng.random(n)
    ys = yanagimoto_map(xs, rng.random(n))
    return _finish("yanagimoto", seed, xs, ys, rng, mirror)


def hyperbola_map(x, y):
    """Sweep the mass between the two branches onto them.

    Points left of 1/2 below ``y = 1/(2(1-x))`` move up to that branch;
    points right of 1/2 above ``y = 1 - 1/(2x)`` move down to it.
    """
    x = np.asarray(x, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    with np.errstate(divide="ignore"):
        upper = 1.0 / (2.0 * (1.0 - x))
        lower = 1.0 - 1.0 / (2.0 * x)
    out = np.where((x < 0.5) & (y < upper), upper, y)
    out = np.where((x > 0.5) & (y > lower), lower, out)
    return out


def sample_hyperbola(n: int, seed=None, mirror: bool = False) -> SampleSet:
    """Uniform pairs swept onto ``2y(1-x) = 1`` and ``2x(1-y) = 1``."""
    _check_n(n)
    rng = np.random.default_rng(seed)
    xs = rng.random(n)
    ys = hyperbola_map(xs, rng.random(n))
    return _finish("hyperbola", seed, xs, ys, rng, mirror)


def _bit_length(v: np.ndarray) -> np.ndarray:
    v = v.copy()
    bl = np.zeros(v.shape, dtype=np.int64)
    for shift in (32, 16, 8, 4, 2, 1):
        big = v >= (np.uint64(1) << np.uint64(shift))
        bl += shift * big
        v = np.where(big, v >> np.uint64(shift), v)
    return bl + (v > 0)


def first_run_length(bits: np.ndarray, depth: int) -> np.ndarray:
    """Length of the leading run of equal digits of depth-bit integers.

    A value made of a single run returns `depth`.
    """
    bits = np.asarray(bits, dtype=np.uint64)
    mask = np.uint64((1 << depth) - 1)
    top = (bits >> np.uint64(depth - 1)) & np.uint64(1)
    # complement runs of ones so the run becomes leading zeros
    v = np.where(top == 1, ~bits & mask, bits)
    return depth - _bit_length(v)


def _binary_pairs(count, depth, rng):
    """Integer digit strings (X, Y) for the binary-expansion construction."""
    xs = np.empty(0, dtype=np.uint64)
    ys = np.empty(0, dtype=np.uint64)
    shift = np.uint64(64 - depth)
    while xs.shape[0] < count:
        need = count - xs.shape[0]
        x = rng.integers(0, 2**64, size=need, dtype=np.uint64, endpoint=False) >> shift
        run = first_run_length(x, depth)
        # runs reaching the last digits have no resampling tail; redraw
        keep = run < depth - 1
        x = x[keep]
        run = run[keep].astype(np.uint64)
        low = np.uint64(depth) - run
        fresh = rng.integers(0, 2**64, size=x.shape[0], dtype=np.uint64) >> (np.uint64(64) - run)
        tail = x & ((np.uint64(1) << low) - np.uint64(1))
        y = (fresh << low) | tail
        xs = np.concatenate([xs, x])
        ys = np.concatenate([ys, y])
    return xs, ys


def sample_binary_expansion(n: int, seed=None, depth: int = 53,
                            mirror: bool = False) -> SampleSet:
    """Binary digits of Y copy X except the first run, which is resampled.

    X has `depth` iid fair binary digits.  If its leading run has length
    ``l``, Y draws its first ``l`` digits afresh and copies digits
    ``l+1..depth`` from X.  Draws whose run covers (almost) all digits,
    and draws duplicating an earlier x or y value, are replaced.
    """
    _check_n(n)
    if not 8 <= depth <= 62:
        raise ValueError("depth must lie in 8..62")
    rng = np.random.default_rng(seed)
    scale = float(2**depth)
    xi, yi = _binary_pairs(n, depth, rng)
    while True:
        xs = xi.astype(np.float64) / scale
        ys = yi.astype(np.float64) / scale
        _, first_x = np.unique(xs, return_index=True)
        _, first_y = np.unique(ys, return_index=True)
        dup = np.ones(n, dtype=bool)
        dup[np.intersect1d(first_x, first_y)] = False
        bad = np.flatnonzero(dup)
        if bad.size == 0:
            break
        xi[bad], yi[bad] = _binary_pairs(bad.size, depth, rng)
    return _finish("binary", seed, xs, ys, rng, mirror)


GENERATORS = {
    "independent": sample_independent,
    "monotone": sample_monotone,
    "yanagimoto": sample_yanagimoto,
    "hyperbola": sample_hyperbola,
    "binary": sample_binary_expansion,
}


def generate(name: str, n: int, seed=None, **kwargs) -> SampleSet:
    """Dispatch to a sampler by name (see `GENERATORS`)."""
    try:
        fn = GENERATORS[name]
    except KeyError:
        raise ValueError(f"unknown generator {name!r}; choose from {sorted(GENERATORS)}") from None
    return fn(n, seed, **kwargs)
