"""
Which cones over general points are smoothable?
===============================================

For r general points in P^{n-1} the cone L_r^n is non-smoothable when the
moduli of the points exceed the Deligne number e.  The table lists the
offending r for each n.
"""

from smoothability.pointset import (
    classify_generic,
    format_ranges,
    generic_invariants,
    m_bound,
    non_smoothable_set,
)

for n in range(6, 11):
    print(n, format_ranges(non_smoothable_set(n)), " M(n) =", m_bound(n))

# moduli against e for n = 6
for r in range(8, 20):
    inv = generic_invariants(6, r)
    print(r, inv.delta, inv.type, inv.deligne_e, inv.moduli, classify_generic(6, r).outcome.name)

# n = 5 relies on a computed range
print(format_ranges(non_smoothable_set(5)))
