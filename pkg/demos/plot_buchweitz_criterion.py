"""
Gaps, sumsets and the Buchweitz test
====================================

A numerical semigroup S gives a monomial curve t -> (t^a1, ..., t^an).
If the sumset (k+1)L of its gap set L is too large, the curve has no
smoothing at all.
"""

from smoothability.semigroup import buchweitz_semigroup, komeda_semigroup, from_generators

S = buchweitz_semigroup()
print(S)
print("gaps:", S.gaps)
print("delta:", S.genus, " conductor:", S.conductor, " type:", S.type)

# |2L| = 46 exceeds 3 * (16 - 1) = 45 already at k = 1
for k in (1, 2):
    print(f"k={k}: |(k+1)L| = {S.sumset_size(k + 1)}, bound = {(2 * k + 1) * (S.genus - 1)}")

v = S.buchweitz_verdict()
print(v.outcome.name, v.witnesses)

# the Dedekind invariant d_1 = |2L| + 3 - delta is 33, larger than 2 delta
print("d_1 =", S.dedekind_dk(1))

# a member of the Komeda family passes at k=1 and fails at k=2
K = komeda_semigroup(16)
print(K.generators, {k: K.dedekind_dk(k) for k in (1, 2)}, "2 delta =", 2 * K.genus)
print(K.buchweitz_verdict().witnesses["k"])

# symmetric semigroups are Gorenstein: d_k = 2k delta exactly
T = from_generators([4, 6, 9])
print(T.is_symmetric, [T.dedekind_dk(k) for k in range(1, 4)], [2 * k * T.genus for k in range(1, 4)])
