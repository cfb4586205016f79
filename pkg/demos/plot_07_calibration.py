"""
Is the KS test honest?
======================

Under the null the two-sample KS test at level 0.01 should reject about
1% of the time.  Each trial uses its own stream id, so the run is
reproducible and trials are independent.
"""

from selfinverse.inference import null_rejection_rate

for n in (100, 500, 2000):
    print(n, null_rejection_rate(trials=1000, n=n, alpha=0.01, seed=11))
