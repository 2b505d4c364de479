"""
Self-associated point sets
==========================

2n points in P^{n-1} are self-associated when they agree with their own
Gale transform.  They fail to impose independent conditions on quadrics
by exactly one, and the cone has T^1 concentrated in degrees <= 0.
"""

from smoothability.conet1 import build
from smoothability.pointset import random_config, random_self_associated

for n in (4, 5, 6, 7):
    G = random_self_associated(n, seed=1)
    H = random_config(n, 2 * n, seed=1)
    print(n, G.is_self_associated(), G.quadric_deficiency(), "| general:",
          H.is_self_associated(), H.quadric_deficiency())

G = random_self_associated(7, seed=2)
rep = build(G).t1_report()
print("delta:", rep.delta, " type:", rep.type)
print("T^1:", rep.t1)
print("negatively graded:", rep.checks["negatively_graded"])
