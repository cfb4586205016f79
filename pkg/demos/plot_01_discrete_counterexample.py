"""
Equal marginals are not enough
==============================

A 3x3 joint table where X and Y have the same marginal law, yet X/Y is
not distributed like Y/X.  Everything is computed with exact fractions.
"""

from fractions import Fraction

from selfinverse import PAPER_TABLE, exchangeability_exact
from selfinverse.ratio import ratio_pmf, reciprocal_pmf

# The table, in units of 1/36
for x, y, p in PAPER_TABLE.cells():
    print(f"Pr[X={x}, Y={y}] = {p * 36}/36")

# Both marginals are uniform on {1, 2, 3}
print("X marginal:", PAPER_TABLE.marginal_x())
print("Y marginal:", PAPER_TABLE.marginal_y())

# ...but the ratio is not self-inverse
pmf = ratio_pmf(PAPER_TABLE)
rec = reciprocal_pmf(pmf)
two = Fraction(2)
print(f"Pr[X/Y = 2] = {pmf[two]},  Pr[Y/X = 2] = {rec[two]}")

# The exact symmetry check names the offending pair of cells
print(exchangeability_exact(PAPER_TABLE).to_json())
