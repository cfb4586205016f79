"""
Ratio densities by quadrature
=============================

The density of X/Y for a correlated normal pair, by adaptive Gauss-Kronrod
integration over the joint density, compared with its closed form.
"""

import numpy as np

from selfinverse import BivariateNormalJoint, corr_normal_ratio, density
from selfinverse.ratio import ratio_density_with_error

rho = 0.5
joint = BivariateNormalJoint(rho)
ref = corr_normal_ratio(rho)

print(f"{'z':>6} {'quadrature':>14} {'closed form':>14} {'err bound':>10}")
for z in np.linspace(-3, 3, 13):
    val, err = ratio_density_with_error(joint, float(z), tol=1e-10)
    print(f"{z:6.2f} {val:14.10f} {density(ref, z):14.10f} {err:10.1e}")
