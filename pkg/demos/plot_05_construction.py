"""
Every self-inverse law is a ratio of an exchangeable pair
=========================================================

Given Z, draw W, a fair coin I, and set X = W Z^I, Y = W Z^(1-I).  The pair
is exchangeable and X/Y = Z^(2I-1).  If Z is self-inverse, X/Y has the law
of Z; otherwise it has the mixture law (Law(Z) + Law(1/Z)) / 2.
"""

from selfinverse import build_pair, exponential, log_uniform, constant, new_stream
from selfinverse.construction import exchangeability_certificate
from selfinverse.inference import ks_one_sample
from selfinverse.ratio import mixture_cdf, ratio_sample

# Round trip on a self-inverse law
pair = build_pair(log_uniform(), constant(1.0))
z = ratio_sample(pair, new_stream(seed=1), 20_000)
print("log-uniform round trip:", ks_one_sample(z, log_uniform()).decision)
print("pair exchangeable:", exchangeability_certificate(pair, new_stream(seed=2)).decision)

# A law that is not self-inverse comes back mixed
d = exponential(1.0)
ze = ratio_sample(build_pair(d, constant(1.0)), new_stream(seed=3), 20_000)
print("vs mixture cdf:   ", ks_one_sample(ze, lambda v: mixture_cdf(d, v), 0.001).decision)
print("vs exponential cdf:", ks_one_sample(ze, d, 0.001).decision)
