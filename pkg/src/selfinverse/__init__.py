"""Self-inverse random variables: Z with the same law as 1/Z.

Build, sample and check ratio laws X/Y, exchangeable-pair constructions
and the characteristic-function obstruction to iid ratio representations.
"""
from . import catalog, construction, inference, quadrature, ratio, rng
from .catalog import (
    PAPER_REGIONS, PAPER_TABLE, BivariateNormalJoint, ConstructedPair, DiscreteTable,
    DistSpec, JointSpec, PairSample, ProductJoint, RegionUniform, Sample, cauchy, cdf,
    constant, corr_normal_ratio, density, exponential, f_ratio, joint_density,
    joint_pmf_table, laha, log_rademacher, log_uniform, normal, sample, sample_joint,
    standard_cauchy,
)
from .construction import build_pair, exchangeability_certificate, sample_constructed
from .errors import (
    AdmissionError, CapabilityError, QuadratureError, SampleSizeError, SelfInverseError,
    SpecDomainError, SpecSyntaxError, ZeroDenominatorError,
)
from .grammar import parse_spec, to_text
from .inference import (
    CfCurve, TestReport, analytic_log_cf, empirical_cf, exchangeability_exact,
    exchangeability_test, iid_decomposability_obstruction, ks_one_sample, ks_two_sample,
    log_abs, log_symmetry_test, self_inverse_test,
)
from .ratio import (
    mixture_cdf, ratio_density, ratio_pmf, ratio_sample, reciprocal_cdf,
    reciprocal_density, reciprocal_pmf, swapped_ratio_sample,
)
from .rng import RandomStream, StreamKey, new_stream

__version__ = "0.1.0"
