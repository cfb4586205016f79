"""
When no iid ratio representation exists
=======================================

If Z = X/Y with X, Y iid, the characteristic function of log|Z| is
|phi(t)|^2 and so never negative.  For log-uniform Z on (1/e, e) it is
sin(t)/t, which dips below zero; for Z = e^{+-1} it is cos(t).
"""

import numpy as np

from selfinverse import log_rademacher, log_uniform, new_stream, sample, standard_cauchy
from selfinverse.inference import (
    analytic_log_cf, empirical_cf, iid_decomposability_obstruction, log_abs,
)

t = np.linspace(0, 10, 201)
for d in (log_uniform(), log_rademacher()):
    w = iid_decomposability_obstruction(analytic_log_cf(d, t)).diagnostics["witness"]
    print(f"{d}: witness t = {w['t']:.4f}, margin = {w['margin']:.4f}")

# The standard Cauchy is a ratio of iid normals, so no witness can appear
z = sample(standard_cauchy(), new_stream(seed=5), 100_000)
rep = iid_decomposability_obstruction(empirical_cf(log_abs(z), t))
print("log|Cauchy|:", rep.decision, "min Re =", rep.diagnostics["min_re"])
