"""
A non-Cauchy law whose ratio is Cauchy
======================================

The density sqrt(2) / (pi (1 + x^4)) is not Cauchy, yet the ratio of two
independent draws is standard Cauchy.  We sample it by rejection from a
Cauchy envelope and check both the sample and the ratio density.
"""

import math

from selfinverse import ProductJoint, laha, new_stream, standard_cauchy
from selfinverse.inference import ks_one_sample
from selfinverse.ratio import ratio_density, ratio_sample

joint = ProductJoint(laha(), laha())

z = ratio_sample(joint, new_stream(seed=7), 20_000)
print(ks_one_sample(z, standard_cauchy(), alpha=0.01).to_json())

# The ratio density agrees with 1/(pi (1 + z^2)) pointwise
for v in (0.0, 0.5, 1.0, 3.0):
    print(v, ratio_density(joint, v), 1 / (math.pi * (1 + v * v)))
