"""Independence tests on paired samples.

``hoeffding_test``, ``refined_test`` and ``tau_star_test`` take raw
samples, rank them, compute the statistic and attach a p-value.  All
three statistics, scaled as ``n*D_n``, ``n*R_n`` and ``n*tau*/36``,
share one asymptotic null law; see :mod:`rankindep.nulldist`.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from typing import Literal, Optional

import numpy as np

from .hoeffding import bkr_B, hoeffding_D
from .nulldist import NullDistSpec, limit_law, permutation_pvalue
from .ranking import TieArg, rank_permutation
from .taustar import refined_R, tau_star

__all__ = [
    "TestResult",
    "STATISTIC_NAMES",
    "statistic_result",
    "hoeffding_test",
    "refined_test",
    "tau_star_test",
    "bkr_test",
    "independence_tests",
]

PMethod = Literal["none", "asymptotic", "permutation"]

# selector -> (reported name, statistic function)
STATISTIC_NAMES = {
    "hoeffding": ("HOEFFDING_D", hoeffding_D),
    "bkr": ("BKR_B", bkr_B),
    "refined": ("REFINED_R", refined_R),
    "taustar": ("TAU_STAR", tau_star),
}


@dataclass(frozen=True)
class TestResult:
    """Outcome of one independence test.

    ``scaled`` is the statistic on the scale of the shared limit law:
    ``n*D_n``, ``n*R_n``, ``n*tau*/36`` (and ``n*B_n`` for BKR, which has
    no asymptotic p-value here).
    """

    __test__ = False  # not a pytest class

    statistic: str
    value: float
    scaled: float
    n: int
    p_value: Optional[float] = None
    p_method: str = "none"
    seed: Optional[int] = None

    def __post_init__(self):
        if (self.p_value is None) != (self.p_method == "none"):
            raise ValueError("p_value must be given exactly when p_method is not 'none'")

    def to_dict(self) -> dict:
        return asdict(self)


def _scale(selector: str, value: float, n: int) -> float:
    if selector == "taustar":
        return n * value / 36.0
    return n * value


def statistic_result(selector: str, p, *, pvalue: PMethod = "asymptotic",
                     resamples: int = 999, seed: int = 0,
                     null_spec: NullDistSpec | None = None,
                     null_cache=None) -> TestResult:
    """Compute one statistic on a ranking permutation `p` and its p-value."""
    name, fn = STATISTIC_NAMES[selector]
    p = np.asarray(p)
    n = p.shape[0]
    value = fn(p)
    scaled = _scale(selector, value, n)
    if pvalue == "none":
        return TestResult(name, value, scaled, n)
    if pvalue == "asymptotic":
        if selector == "bkr":
            raise ValueError("no asymptotic p-value for B_n; use pvalue='permutation'")
        pv = limit_law(null_spec, null_cache).pvalue(scaled)
        return TestResult(name, value, scaled, n, pv, "asymptotic")
    if pvalue == "permutation":
        pv = permutation_pvalue(selector, p, resamples, seed)
        return TestResult(name, value, scaled, n, pv, "permutation", seed)
    raise ValueError(f"unknown p-value method {pvalue!r}")


def _run(selector, x, y, ties, pvalue, resamples, seed, null_spec):
    p = rank_permutation(x, y, ties)
    return statistic_result(selector, p, pvalue=pvalue, resamples=resamples,
                            seed=seed, null_spec=null_spec)


def hoeffding_test(x, y, *, ties: TieArg = None, pvalue: PMethod = "asymptotic",
                   resamples: int = 999, seed: int = 0,
                   null_spec: NullDistSpec | None = None) -> TestResult:
    """Hoeffding's D test.  Consistent against dependent densities only."""
    return _run("hoeffding", x, y, ties, pvalue, resamples, seed, null_spec)


def refined_test(x, y, *, ties: TieArg = None, pvalue: PMethod = "asymptotic",
                 resamples: int = 999, seed: int = 0,
                 null_spec: NullDistSpec | None = None) -> TestResult:
    """Refined Hoeffding (Blum-Kiefer-Rosenblatt R_n) test.

    Consistent against every dependent alternative with continuous margins.
    """
    return _run("refined", x, y, ties, pvalue, resamples, seed, null_spec)


def tau_star_test(x, y, *, ties: TieArg = None, pvalue: PMethod = "asymptotic",
                  resamples: int = 999, seed: int = 0,
                  null_spec: NullDistSpec | None = None) -> TestResult:
    """Bergsma-Dassios-Yanagimoto tau* test.

    Examples
    --------
    >>> x = [0.1, 0.4, 0.35, 0.8, 0.9, 0.2]
    >>> tau_star_test(x, x, pvalue="none").value
    0.6666666666666666
    """
    return _run("taustar", x, y, ties, pvalue, resamples, seed, null_spec)


def bkr_test(x, y, *, ties: TieArg = None, resamples: int = 999,
             seed: int = 0) -> TestResult:
    """Blum-Kiefer-Rosenblatt B_n with a permutation p-value."""
    return _run("bkr", x, y, ties, "permutation", resamples, seed, None)


def independence_tests(x, y, tests=("hoeffding", "refined", "taustar"), *,
                       ties: TieArg = None, pvalue: PMethod = "asymptotic",
                       resamples: int = 999, seed: int = 0,
                       null_spec: NullDistSpec | None = None,
                       null_cache=None) -> list[TestResult]:
    """Run several tests on one sample, ranking it only once."""
    p = rank_permutation(x, y, ties)
    return [
        statistic_result(t, p, pvalue=pvalue, resamples=resamples, seed=seed,
                         null_spec=null_spec, null_cache=null_cache)
        for t in tests
    ]
