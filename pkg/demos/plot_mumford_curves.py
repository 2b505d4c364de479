"""
Mumford curves and positive-weight deformations
================================================

C_{d,n} is the monomial curve with semigroup <d, ..., d+n-1> + (2d).
Its positive-degree T^1 counts equisingular deformations.  When that
count passes the dimension e of a smoothing component, the curve cannot
be smoothed.
"""

from smoothability.presentation import minimal_presentation, mumford_verdict, t1_positive_total, t1_profile
from smoothability.semigroup import mumford_semigroup

S = mumford_semigroup(17, 9)
P = minimal_presentation(S)
print(len(P), "binomial relations, first few:")
for rel in P.relations[:4]:
    print("  ", rel.format(S.generators))

prof = t1_profile(P)
print("T^1 by degree:", prof.by_degree)
print("positive part:", t1_positive_total(P), " e:", S.invariants().deligne_e)

# the count is (n-1)(d-n-1) on the whole grid
for d in (10, 14, 18):
    for n in (3, 6, 8):
        if n < d:
            print(d, n, t1_positive_total(minimal_presentation(mumford_semigroup(d, n))), (n - 1) * (d - n - 1))

for d, n in [(17, 9), (13, 9), (20, 10)]:
    v = mumford_verdict(d, n)
    print(f"C_({d},{n}):", v.outcome.name, v.witnesses["(n-6)(d-n-3)"])
