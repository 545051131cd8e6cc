"""Near-linear-time rank tests of independence.

Hoeffding's D_n, the refined statistic R_n and the Bergsma-Dassios-
Yanagimoto tau* computed in O(n log n) from the ranking permutation of a
paired sample, with asymptotic and permutation p-values, brute-force
reference implementations and samplers for Hoeffding-fooling data.

>>> import numpy as np
>>> from rankindep import rank_permutation, tau_star, hoeffding_D
>>> p = rank_permutation([0.3, 0.1, 0.7, 0.5, 0.9], [1.0, 0.5, 2.0, 1.5, 3.0])
>>> p
array([1, 2, 3, 4, 5])
>>> hoeffding_D(p), tau_star(p)
(0.03333333333333333, 0.6666666666666666)
"""

from .errors import (
    InvalidPermutationError,
    LengthMismatchError,
    NonFiniteStatError,
    NonFiniteValueError,
    RankIndepError,
    SampleTooSmallError,
    TiesPresentError,
    TooLargeForOracleError,
    ZeroSizeError,
)
from .generators import (
    GENERATORS,
    SampleSet,
    generate,
    sample_binary_expansion,
    sample_hyperbola,
    sample_independent,
    sample_monotone,
    sample_yanagimoto,
)
from .hoeffding import (
    QuadrantCounts,
    bkr_B,
    bkr_B_exact,
    hoeffding_D,
    hoeffding_D_exact,
    quadrant_counts,
)
from .independence import (
    TestResult,
    bkr_test,
    hoeffding_test,
    independence_tests,
    refined_test,
    tau_star_test,
)
from .nulldist import (
    LIMIT_VARIANCE,
    NullDistSpec,
    NullLaw,
    asymptotic_pvalue,
    limit_law,
    permutation_pvalue,
    sample_limit_law,
)
from .ranking import TiePolicy, as_permutation, inverse, rank_permutation, reverse
from .sumarray import SumArray
from .taustar import (
    quad,
    refined_R,
    refined_R_exact,
    t_statistic,
    tau_star,
    tau_star_exact,
)

__version__ = "0.1.0"
