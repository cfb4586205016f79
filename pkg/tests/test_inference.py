import json
import math

import numpy as np
import pytest
from fractions import Fraction
from hypothesis import given, settings, strategies as st
from scipy import stats

from selfinverse import catalog as C
from selfinverse.construction import build_pair
from selfinverse.errors import CapabilityError, SampleSizeError, SelfInverseError
from selfinverse.inference import (
    _bowker, analytic_log_cf, empirical_cf, exchangeability_exact, exchangeability_test,
    iid_decomposability_obstruction, ks_one_sample, ks_two_sample, log_abs, log_symmetry_test,
    self_inverse_test, CfCurve,
)
from selfinverse.ratio import ratio_sample
from selfinverse.rng import new_stream


# -- KS -------------------------------------------------------------------

def test_ks_two_sample_statistic_matches_scipy():
    s = new_stream(seed=1)
    a = C.sample(C.normal(), s, 700).values
    b = C.sample(C.normal(0.2, 1.0), s, 500).values
    r = ks_two_sample(a, b)
    assert r.statistic == pytest.approx(stats.ks_2samp(a, b).statistic, abs=1e-15)
    # asymptotic p-value with the documented correction, computed independently
    m = 700 * 500 / 1200
    lam = (math.sqrt(m) + 0.12 + 0.11 / math.sqrt(m)) * r.statistic
    series = 2 * sum((-1) ** (k - 1) * math.exp(-2 * k * k * lam * lam) for k in range(1, 200))
    assert r.p_value == pytest.approx(series, abs=1e-12)


def test_ks_one_sample_statistic_matches_scipy():
    x = C.sample(C.laha(), new_stream(seed=2), 1000).values
    r = ks_one_sample(x, C.laha())
    ref = stats.kstest(x, lambda v: C.cdf(C.laha(), v))
    assert r.statistic == pytest.approx(ref.statistic, abs=1e-15)


def test_ks_same_law_passes():
    a = C.sample(C.standard_cauchy(), new_stream(seed=3, stream_id=0), 10_000)
    b = C.sample(C.standard_cauchy(), new_stream(seed=3, stream_id=1), 10_000)
    r = ks_two_sample(a, b, 0.01)
    assert r.passed and r.seed == 3


def test_ks_uniform_self_consistency():
    u = new_stream(seed=4).uniform01(10_000)
    assert ks_one_sample(u, lambda v: np.clip(v, 0, 1)).passed


def test_ks_gross_mismatch_rejects():
    x = C.sample(C.exponential(1.0), new_stream(seed=5), 10_000)
    r = ks_one_sample(x, C.standard_cauchy(), alpha=0.001)
    assert r.decision == "reject"


def test_ks_size_guard():
    with pytest.raises(SampleSizeError):
        ks_two_sample(np.arange(10.0), np.arange(30.0))
    with pytest.raises(SampleSizeError):
        ks_one_sample(np.arange(10.0), lambda v: v)


def test_report_json_fields():
    r = ks_two_sample(np.arange(30.0), np.arange(30.0) + 0.5)
    d = json.loads(r.to_json())
    assert set(d) == {"test", "statistic", "p_value", "alpha", "decision", "n", "seed", "diagnostics"}
    assert (d["decision"] == "reject") == (d["p_value"] < d["alpha"])


# -- self-inverse / log symmetry -------------------------------------------

def test_self_inverse_cauchy_passes():
    r = self_inverse_test(C.standard_cauchy(), 20_000, 0.01, stream=new_stream(seed=6))
    assert r.passed and r.test == "self-inverse"


def test_self_inverse_shifted_uniform_ratio_rejects():
    r = self_inverse_test(C.PAPER_REGIONS, 10_000, 0.001, stream=new_stream(seed=6))
    assert r.decision == "reject"


def test_theta_pivot():
    z = C.sample(C.log_uniform(), new_stream(seed=7), 40_000).values
    scaled = C.Sample(2 * z)
    # brute-force oracle: 2Z and 4/(2Z) have equal cdfs, 2Z and 1/(2Z) do not
    grid = np.linspace(0.5, 6, 12)
    lu = C.log_uniform()
    assert np.allclose(C.cdf(lu, grid / 2), 1 - C.cdf(lu, 2 / grid), atol=1e-12)
    assert not np.allclose(C.cdf(lu, grid / 2), 1 - C.cdf(lu, 0.5 / grid), atol=1e-3)
    assert self_inverse_test(scaled, alpha=0.01, theta=2.0).passed
    assert self_inverse_test(scaled, alpha=0.01, theta=1.0).decision == "reject"


def test_sample_source_is_split_not_self_compared():
    # an exactly self-reciprocal sample (z and 1/z interleaved) must be split,
    # so the test sees two independent halves
    z = np.array([2.0, 0.5] * 100)
    r = self_inverse_test(z, alpha=0.01)
    assert r.diagnostics["n1"] == 100 and r.diagnostics["n2"] == 100


def test_theta_needs_positive_values():
    with pytest.raises(SelfInverseError):
        self_inverse_test(C.standard_cauchy(), 100, theta=2.0, stream=new_stream(seed=1))
    with pytest.raises(ValueError):
        self_inverse_test(C.standard_cauchy(), 100, theta=0.0, stream=new_stream(seed=1))


def test_stream_required_for_specs():
    with pytest.raises(ValueError):
        self_inverse_test(C.standard_cauchy(), 100)


def test_log_symmetry():
    # at alpha = 0.01 some seeds reject by chance; over 20 seeds expect ~0.2 rejections
    rejects = sum(not log_symmetry_test(C.f_ratio(4), 20_000, 0.01, stream=new_stream(seed=k)).passed
                  for k in range(20))
    assert rejects <= 2
    assert log_symmetry_test(C.log_rademacher(), 5_000, 0.01, stream=new_stream(seed=8)).passed
    r = log_symmetry_test(C.exponential(1.0), 10_000, 0.001, stream=new_stream(seed=8))
    assert r.decision == "reject"
    with pytest.raises(SelfInverseError):
        log_symmetry_test(np.array([-1.0] * 100))


def test_log_exponential_is_asymmetric_brute_force():
    # log of Exp(1): Pr[W <= -w] vs Pr[W >= w] differ, so symmetry fails
    e = C.exponential(1.0)
    w = 1.0
    assert abs(C.cdf(e, math.exp(-w)) - (1 - C.cdf(e, math.exp(w)))) > 0.2


# -- exchangeability --------------------------------------------------------

def test_exact_exchangeability_witness():
    r = exchangeability_exact(C.PAPER_TABLE)
    assert r.decision == "reject" and r.p_value is None
    w = r.diagnostics["witness"]
    assert w["cells"] == [[1, 2], [2, 1]]
    assert w["probabilities"] == [Fraction(9, 36), Fraction(1, 36)]


def test_exact_exchangeability_symmetric_table_passes():
    t = C.DiscreteTable((1, 2), (1, 2), ((Fraction(1, 4),) * 2,) * 2)
    assert exchangeability_exact(t).passed


def test_bowker_iid_passes_and_regions_reject():
    s = new_stream(seed=20)
    iid = C.sample_joint(C.ProductJoint(C.normal(), C.normal()), s, 100_000)
    assert exchangeability_test(iid, grid=6, alpha=0.01).passed
    reg = C.sample_joint(C.PAPER_REGIONS, s, 100_000)
    r = exchangeability_test(reg, grid=[1.0, 2.0], alpha=0.001)
    assert r.decision == "reject" and r.diagnostics["k"] == 3


def test_bowker_statistic_by_hand():
    counts = np.array([[5, 3, 0], [1, 7, 4], [0, 6, 2]])
    stat, df, _ = _bowker(counts)
    assert stat == pytest.approx((3 - 1) ** 2 / 4 + (4 - 6) ** 2 / 10)
    assert df == 2


@settings(max_examples=40)
@given(st.lists(st.integers(0, 30), min_size=16, max_size=16), st.permutations(range(4)))
def test_bowker_invariant_under_joint_permutation(cells, perm):
    counts = np.array(cells).reshape(4, 4)
    p = np.array(perm)
    a = _bowker(counts)[:2]
    b = _bowker(counts[np.ix_(p, p)])[:2]
    assert a[1] == b[1]
    assert a[0] == pytest.approx(b[0], rel=1e-12)


def test_auto_grid_coarsens_sparse_pairs():
    s = new_stream(seed=21)
    pairs = C.sample_joint(C.ProductJoint(C.normal(), C.normal()), s, 60)
    r = exchangeability_test(pairs, grid=8)
    assert r.diagnostics["k"] < 8


def test_degenerate_grid():
    pairs = C.PairSample(np.ones(50), np.ones(50))
    with pytest.raises(SelfInverseError):
        exchangeability_test(pairs, grid=[5.0])


# -- characteristic functions ----------------------------------------------

def test_analytic_log_cf_values():
    c = analytic_log_cf(C.log_uniform(), [0.0, 1.5 * math.pi])
    assert c.values[0] == 1
    assert c.values[1].real == pytest.approx(-0.212207, abs=1e-6)
    c = analytic_log_cf(C.log_rademacher(), [0.0, math.pi])
    assert c.values[0] == 1 and c.values[1] == -1
    assert c.band == 0
    with pytest.raises(CapabilityError):
        analytic_log_cf(C.standard_cauchy(), [0.0])


def test_empirical_cf_of_uniform():
    u = 2 * new_stream(seed=30).uniform01(100_000) - 1
    c = empirical_cf(u, [0.0, 1.5 * math.pi])
    assert c.values[0] == 1.0
    assert abs(c.values[1].real - (-0.2122)) < 0.0095
    assert c.band == pytest.approx(3 / math.sqrt(100_000))


@settings(max_examples=30)
@given(st.lists(st.floats(-50, 50), min_size=100, max_size=300),
       st.lists(st.floats(0, 20), min_size=1, max_size=10))
def test_empirical_cf_conjugate_symmetry_exact(u, ts):
    t = np.array(ts)
    c = empirical_cf(np.array(u), np.concatenate([t, -t]))
    k = len(t)
    assert np.array_equal(c.values[k:], np.conj(c.values[:k]))
    assert np.all(np.abs(c.values) <= 1 + c.band)


def test_empirical_cf_size_guard():
    with pytest.raises(SampleSizeError):
        empirical_cf(np.zeros(10), [0.0])


def test_obstruction_analytic_witnesses():
    t = np.linspace(0, 10, 201)
    r = iid_decomposability_obstruction(analytic_log_cf(C.log_uniform(), t))
    w = r.diagnostics["witness"]
    assert r.decision == "reject"
    assert abs(w["t"] - 1.5 * math.pi) < 0.05
    assert w["margin"] == pytest.approx(2 / (3 * math.pi), abs=1e-6)
    r = iid_decomposability_obstruction(analytic_log_cf(C.log_rademacher(), t))
    w = r.diagnostics["witness"]
    assert w["t"] == pytest.approx(math.pi, abs=1e-9)
    assert w["margin"] == pytest.approx(1.0, abs=1e-12)


def test_obstruction_absent_for_cauchy():
    z = C.sample(C.standard_cauchy(), new_stream(seed=31), 100_000)
    r = iid_decomposability_obstruction(empirical_cf(log_abs(z), np.linspace(0, 10, 201)))
    assert r.decision == "pass" and r.diagnostics["witness"] is None


@pytest.mark.parametrize("i, d", list(enumerate([C.standard_cauchy(), C.laha(), C.normal(1.0, 2.0),
                                            C.exponential(1.0), C.log_uniform(), C.f_ratio(3)])),
                         ids=lambda v: str(v))
def test_no_witness_for_iid_log_differences(i, d):
    s = new_stream(seed=32, stream_id=i)
    u = log_abs(C.sample(d, s, 50_000)) - log_abs(C.sample(d, s, 50_000))
    r = iid_decomposability_obstruction(empirical_cf(u, np.linspace(0, 10, 201)))
    assert r.diagnostics["witness"] is None


def test_obstruction_on_empirical_log_uniform_sample():
    u = log_abs(C.sample(C.log_uniform(), new_stream(seed=33), 100_000))
    r = iid_decomposability_obstruction(empirical_cf(u, np.linspace(0, 10, 201)))
    w = r.diagnostics["witness"]
    assert r.decision == "reject"
    assert math.pi < w["t"] < 2 * math.pi


def test_obstruction_ignores_points_with_large_imaginary_part():
    t = np.linspace(0, 1, 5)
    c = CfCurve(t, np.array([1, -0.5 + 0.4j, -0.5 + 0.4j, 0.2, 0.1]), band=0.01, source="empirical", n=1)
    assert iid_decomposability_obstruction(c).decision == "pass"
