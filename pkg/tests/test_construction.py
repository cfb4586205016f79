import numpy as np
import pytest

from selfinverse import catalog as C
from selfinverse.construction import build_pair, exchangeability_certificate, sample_constructed
from selfinverse.errors import AdmissionError
from selfinverse.inference import ks_one_sample, ks_two_sample
from selfinverse.ratio import mixture_cdf, ratio_sample, ratios_from_pairs
from selfinverse.rng import new_stream


def test_build_pair_defaults_and_admission():
    p = build_pair(C.log_uniform())
    assert p.w == C.constant(1.0)
    assert build_pair(C.standard_cauchy(), C.normal()).w == C.normal()
    with pytest.raises(AdmissionError):
        build_pair(C.log_uniform(), C.constant(0.0))
    with pytest.raises(AdmissionError):
        build_pair(C.constant(0.0))
    with pytest.raises(AdmissionError):
        build_pair(C.PAPER_TABLE)


def test_pair_is_usable_as_joint():
    p = build_pair(C.log_uniform())
    pairs = C.sample_joint(p, new_stream(seed=1), 50)
    assert len(pairs) == 50
    assert pairs.spec_text == "constructed(z=log-uniform, w=constant(1.0))"


def test_with_unit_w_one_coordinate_is_one():
    pairs = sample_constructed(build_pair(C.log_uniform()), new_stream(seed=2), 1000)
    # X = Z^I: exactly one of X, Y equals 1 per pair (Z = 1 has probability 0)
    assert np.all((pairs.x == 1.0) ^ (pairs.y == 1.0))


@pytest.mark.parametrize("z, w", [(C.log_uniform(), C.constant(1.0)),
                                  (C.standard_cauchy(), C.normal(2.0, 3.0)),
                                  (C.exponential(1.0), C.laha())])
def test_two_algebraic_forms_agree(z, w):
    pair = build_pair(z, w)
    a = sample_constructed(pair, new_stream(seed=8), 2000, form="power")
    b = sample_constructed(pair, new_stream(seed=8), 2000, form="linear")
    assert np.array_equal(a.x, b.x)
    assert np.array_equal(a.y, b.y)


def test_unknown_form():
    with pytest.raises(ValueError):
        sample_constructed(build_pair(C.log_uniform()), new_stream(seed=1), 3, form="other")


@pytest.mark.parametrize("z", [C.log_uniform(), C.exponential(1.0), C.standard_cauchy()], ids=str)
def test_ratio_does_not_depend_on_w(z):
    r1 = ratio_sample(build_pair(z, C.constant(1.0)), new_stream(seed=4), 5000).values
    r2 = ratio_sample(build_pair(z, C.normal(0.0, 1.0)), new_stream(seed=4), 5000).values
    r3 = ratio_sample(build_pair(z, C.laha()), new_stream(seed=4), 5000).values
    assert np.allclose(r1, r2, rtol=1e-12, atol=0)
    assert np.allclose(r1, r3, rtol=1e-12, atol=0)


def test_ratio_equals_z_to_the_2i_minus_1():
    pair = build_pair(C.exponential(1.0))
    s = new_stream(seed=6)
    r = ratios_from_pairs(sample_constructed(pair, s, 500)).values
    s2 = new_stream(seed=6)
    z = C.sample(C.exponential(1.0), s2.spawn(0), 500).values
    s2.spawn(1)
    i = s2.spawn(2).bernoulli_half(500)
    assert np.allclose(r, z ** (2 * i - 1), rtol=1e-13)


def test_log_uniform_roundtrip_matches_mixture_and_law():
    pair = build_pair(C.log_uniform())
    r = ratio_sample(pair, new_stream(seed=10, stream_id=0), 20_000)
    # direct draws of the mixture: Z with prob 1/2, 1/Z otherwise
    s = new_stream(seed=10, stream_id=1)
    z = C.sample(C.log_uniform(), s, 20_000).values
    flip = s.bernoulli_half(20_000)
    mix = np.where(flip == 1, z, 1 / z)
    assert ks_two_sample(r, mix, alpha=0.01).passed
    direct = C.sample(C.log_uniform(), new_stream(seed=10, stream_id=2), 20_000)
    assert ks_two_sample(r, direct, alpha=0.01).passed


def test_exponential_pair_ratio_has_mixture_law_not_exponential():
    d = C.exponential(1.0)
    r = ratio_sample(build_pair(d), new_stream(seed=12), 20_000)
    assert ks_one_sample(r, lambda v: mixture_cdf(d, v), alpha=0.01).passed
    assert not ks_one_sample(r, d, alpha=0.001).passed


@pytest.mark.parametrize("z, w", [(C.log_uniform(), C.constant(1.0)),
                                  (C.standard_cauchy(), C.normal()),
                                  (C.exponential(1.0), C.exponential(2.0))], ids=str)
def test_constructed_pairs_are_exchangeable(z, w):
    rep = exchangeability_certificate(build_pair(z, w), new_stream(seed=13), 100_000, grid=6)
    assert rep.passed, rep.to_dict()


def test_certificate_on_product_and_table():
    rep = exchangeability_certificate(C.ProductJoint(C.normal(), C.normal()), new_stream(seed=14),
                                      100_000, grid=6)
    assert rep.passed
    rep = exchangeability_certificate(C.PAPER_TABLE, new_stream(seed=14))
    assert rep.decision == "reject"
    assert rep.diagnostics["witness"]["cells"] == [[1, 2], [2, 1]]
