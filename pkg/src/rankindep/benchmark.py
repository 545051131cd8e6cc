"""Run-time scaling of the three statistics.

Each size gets one uniform random permutation.  Only the statistic call
is timed (no data generation or I/O), after a warm-up call that loads
the compiled kernels.  The fitted slope of log(seconds) against log(n)
is close to 1 for an O(n log n) method over a few decades of n, drifting
upwards once the working set leaves the CPU caches.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

import numpy as np

from .hoeffding import hoeffding_D
from .taustar import refined_R, tau_star

__all__ = ["BENCH_STATISTICS", "BenchmarkReport", "loglog_slope", "run_benchmark"]

BENCH_STATISTICS = {
    "hoeffding": hoeffding_D,
    "refined": refined_R,
    "taustar": tau_star,
}

DEFAULT_SIZES = (10**5, 10**6, 10**7)


def loglog_slope(sizes, seconds) -> float:
    """Least-squares slope of ``log(seconds)`` on ``log(sizes)``."""
    x = np.log(np.asarray(sizes, dtype=np.float64))
    y = np.log(np.asarray(seconds, dtype=np.float64))
    if x.size < 2:
        raise ValueError("need at least two sizes for a slope")
    return float(np.polyfit(x, y, 1)[0])


@dataclass
class BenchmarkReport:
    sizes: tuple
    timings: dict = field(default_factory=dict)  # statistic -> list of seconds

    @property
    def slopes(self) -> dict:
        return {s: loglog_slope(self.sizes, t) for s, t in self.timings.items()}

    def rows(self):
        for i, n in enumerate(self.sizes):
            for stat, secs in self.timings.items():
                yield n, stat, secs[i]


def run_benchmark(sizes=DEFAULT_SIZES, statistics=("hoeffding", "refined", "taustar"),
                  seed: int = 0, repeats: int = 1) -> BenchmarkReport:
    """Time each statistic on a random permutation of every size.

    Parameters
    ----------
    sizes : sequence of int
        Strictly increasing sample sizes (each at least 5).
    statistics : sequence of str
        Keys of `BENCH_STATISTICS`.
    seed : int
        Seeds the permutations.
    repeats : int
        Each timing is the minimum over this many calls.
    """
    sizes = tuple(int(n) for n in sizes)
    if not sizes or any(b <= a for a, b in zip(sizes, sizes[1:])):
        raise ValueError("sizes must be strictly increasing")
    if sizes[0] < 5:
        raise ValueError("sizes must be at least 5")
    if repeats < 1:
        raise ValueError("repeats must be >= 1")
    unknown = set(statistics) - set(BENCH_STATISTICS)
    if unknown:
        raise ValueError(f"unknown statistics {sorted(unknown)}")

    rng = np.random.default_rng(seed)
    perms = [rng.permutation(n).astype(np.int64) + 1 for n in sizes]
    report = BenchmarkReport(sizes)
    for stat in statistics:
        fn = BENCH_STATISTICS[stat]
        fn(perms[0])  # warm-up
        secs = []
        for p in perms:
            best = np.inf
            for _ in range(repeats):
                t0 = time.perf_counter()
                fn(p)
                best = min(best, time.perf_counter() - t0)
            secs.append(best)
        report.timings[stat] = secs
    return report
