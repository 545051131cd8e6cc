import numpy as np
import pytest

from rankindep.errors import SampleTooSmallError, TiesPresentError
from rankindep.generators import generate
from rankindep.independence import (
    TestResult,
    bkr_test,
    hoeffding_test,
    independence_tests,
    refined_test,
    tau_star_test,
)
from rankindep.nulldist import NullDistSpec
from rankindep.ranking import TiePolicy

SMALL = NullDistSpec(J=20, K=20, mc_samples=20_000, seed=1)


def test_result_schema():
    r = hoeffding_test([1, 2, 3, 4, 5, 6], [2, 1, 4, 3, 6, 5], pvalue="none")
    assert set(r.to_dict()) == {"statistic", "value", "scaled", "n", "p_value", "p_method", "seed"}
    assert r.p_value is None and r.p_method == "none"


def test_result_requires_consistent_pvalue():
    with pytest.raises(ValueError):
        TestResult("TAU_STAR", 0.1, 0.1, 10, p_value=0.5)
    with pytest.raises(ValueError):
        TestResult("TAU_STAR", 0.1, 0.1, 10, p_method="asymptotic")


def test_monotone_sample_hits_pvalue_floor():
    x = np.linspace(0, 1, 300)
    res = independence_tests(x, x ** 2)
    names = [r.statistic for r in res]
    assert names == ["HOEFFDING_D", "REFINED_R", "TAU_STAR"]
    floor = 1 / (1 + NullDistSpec().mc_samples)
    assert res[0].value == 1 / 30
    assert res[2].value == 2 / 3
    assert res[1].value == pytest.approx(1 / 90, rel=1e-15)
    for r in res:
        assert r.p_value == floor
        assert r.p_method == "asymptotic"


def test_scaling():
    s = generate("independent", 200, seed=4)
    h, r, t = independence_tests(*s, pvalue="none")
    assert h.scaled == 200 * h.value
    assert r.scaled == 200 * r.value
    assert t.scaled == pytest.approx(200 * t.value / 36, rel=1e-15)


def test_yanagimoto_typical_seed():
    s = generate("yanagimoto", 300, seed=0)
    assert hoeffding_test(*s).p_value > 0.01
    assert refined_test(*s).p_value < 1e-3
    assert tau_star_test(*s).p_value < 1e-3


def test_permutation_method_records_seed():
    s = generate("yanagimoto", 60, seed=2)
    r = tau_star_test(*s, pvalue="permutation", resamples=199, seed=7)
    assert r.p_method == "permutation" and r.seed == 7
    assert 1 / 200 <= r.p_value <= 1
    assert r == tau_star_test(*s, pvalue="permutation", resamples=199, seed=7)


def test_bkr_is_permutation_only():
    s = generate("monotone", 30, seed=1)
    r = bkr_test(*s, resamples=99)
    assert r.statistic == "BKR_B" and r.p_value == 0.01
    from rankindep.independence import statistic_result
    with pytest.raises(ValueError):
        statistic_result("bkr", np.arange(1, 10), pvalue="asymptotic")


def test_custom_null_spec():
    s = generate("independent", 100, seed=3)
    r = hoeffding_test(*s, null_spec=SMALL)
    assert r.p_value >= 1 / (1 + SMALL.mc_samples)


def test_errors_propagate():
    with pytest.raises(TiesPresentError):
        tau_star_test([1, 1, 2, 3], [1, 2, 3, 4])
    r = tau_star_test([1, 1, 2, 3], [1, 2, 3, 4], ties=TiePolicy.random(1), pvalue="none")
    assert r.n == 4
    with pytest.raises(SampleTooSmallError):
        hoeffding_test([1, 2, 3, 4], [1, 2, 3, 4])
    with pytest.raises(ValueError):
        hoeffding_test(np.arange(6), np.arange(6), pvalue="exact")
