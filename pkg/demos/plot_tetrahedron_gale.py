"""
Ten points in P^5 with no negative deformations
===============================================

The vertices and edge midpoints of a tetrahedron give 10 points in P^3.
Their Gale transform is 10 points in P^5 lying on 11 quadrics.  The cone
over them has T^1 only in degree 0, with dimension 15, while a smoothing
component would have dimension e = 20.
"""

from smoothability.conet1 import build
from smoothability.pointset import modified_tetrahedron, tetrahedron_midpoints

P = tetrahedron_midpoints()
print(P)
print("Hilbert function:", P.hilbert_values())
print("general position:", P.is_general_position(), " uniform:", P.is_uniform_position())

G = P.gale_transform()
print(G)
# the transform of the transform is the original configuration
print(G.gale_transform().is_projectively_equivalent(P))

M = build(G)
print("quadrics:", len(M.generators))
rep = M.t1_report()
print("T^1:", rep.t1, " e:", rep.deligne_e, " moduli:", rep.moduli)

# moving one midpoint off the special position opens up degree -1
rep2 = build(modified_tetrahedron().gale_transform()).t1_report()
print("modified:", rep2.t1)
