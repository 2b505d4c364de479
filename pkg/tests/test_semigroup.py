import itertools
from math import gcd
from functools import reduce

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from smoothability.errors import (
    BadParameters,
    BelowConductor,
    EmptyInput,
    GcdNotOne,
    GenusTooSmall,
    MultiplicityTooSmall,
    NotMember,
)
from smoothability.semigroup import (
    buchweitz_semigroup,
    from_generators,
    komeda_semigroup,
    mumford_semigroup,
    ordinary_semigroup,
    parse_generators,
    stohr_torres_double,
)
from smoothability.verdict import Outcome

# -- independent oracles ------------------------------------------------------------


def members_by_search(gens, bound):
    """Members below bound by direct representation search."""
    out = set()
    for m in range(bound):
        stack = [m]
        seen = set()
        while stack:
            x = stack.pop()
            if x == 0:
                out.add(m)
                break
            for a in gens:
                if x - a >= 0 and x - a not in seen:
                    seen.add(x - a)
                    stack.append(x - a)
    return out


def sumset_by_loops(gaps, k):
    return {sum(t) for t in itertools.product(gaps, repeat=k)}


def dedekind_by_quotient(S, k):
    """d_k as a colength: omega exponents W = N u {-1-l : l in L},
    d_k = #{s in S : s + kW not inside S}."""
    c = S.conductor
    W = set(range(c + 1)) | {-1 - l for l in S.gaps}
    kW = {0}
    for _ in range(k):
        kW = {a + b for a in kW for b in W}
    bound = c + k * (c + 1) + 5
    return sum(1 for s in range(bound) if s in S and not all((s + w) in S for w in kW))


semigroup_gens = st.lists(st.integers(2, 23), min_size=1, max_size=5).filter(
    lambda g: reduce(gcd, g) == 1)


# -- construction -------------------------------------------------------------------


def test_cusp():
    S = from_generators([2, 3])
    assert S.gaps == (1,)
    assert (S.frobenius, S.conductor, S.genus) == (1, 2, 1)


def test_buchweitz_basic():
    S = buchweitz_semigroup()
    assert S.genus == 16 and S.conductor == 26
    assert S.generators == (13, 14, 15, 16, 17, 18, 20, 22, 23)


def test_gcd_not_one():
    with pytest.raises(GcdNotOne):
        from_generators([4, 6])


def test_empty_input():
    with pytest.raises(EmptyInput):
        from_generators([])
    with pytest.raises(EmptyInput):
        parse_generators(" , ")


def test_non_minimal_input_is_minimalized():
    S = from_generators([3, 5, 6, 7, 8, 9, 10, 13])
    assert S.generators == (3, 5, 7)
    assert S.embedding_dim == 3


def test_parse_generators():
    assert parse_generators("13, 14,15") == [13, 14, 15]


@settings(max_examples=80, deadline=None)
@given(semigroup_gens)
def test_gaps_match_search(gens):
    S = from_generators(gens)
    bound = min(gens) * max(gens) + 2
    members = members_by_search(gens, bound)
    assert set(S.gaps) == set(range(1, bound)) - members
    assert S.genus == len(S.gaps)
    assert S.frobenius == (max(S.gaps) if S.gaps else -1)
    assert all(m in S for m in range(S.conductor, S.conductor + 2 * min(gens)))
    # minimality: no generator is a sum of the others
    for a in S.generators:
        others = [b for b in S.generators if b != a]
        assert a not in members_by_search(others, a + 1)


def test_contains():
    S = buchweitz_semigroup()
    assert 19 not in S
    assert 32 in S
    assert -5 not in S
    assert not from_generators([2, 3]).contains(1)


# -- invariants ---------------------------------------------------------------------


def test_cusp_invariants():
    inv = from_generators([2, 3]).invariants()
    assert inv.type == 1 and inv.symmetric and inv.deligne_e == 2


def test_buchweitz_invariants():
    S = buchweitz_semigroup()
    inv = S.invariants()
    assert inv.type == 4
    assert inv.pseudo_frobenius == (19, 21, 24, 25)
    assert inv.deligne_e == 2 * 16 + 4 - 1


def test_mumford_17_9_invariants():
    inv = mumford_semigroup(17, 9).invariants()
    assert inv.type == 8
    assert inv.deligne_e == 55 == 5 * 17 - 3 * 9 - 3


def test_mu_genus():
    assert from_generators([2, 3]).mu_genus() == (2, 1)
    assert buchweitz_semigroup().mu_genus() == (32, 16)
    assert from_generators([3, 4, 5]).mu_genus() == (4, 2)


@settings(max_examples=80, deadline=None)
@given(semigroup_gens)
def test_pseudo_frobenius_definition(gens):
    S = from_generators(gens)
    nonzero = [m for m in range(1, 2 * S.conductor + max(gens)) if m in S]
    expected = tuple(l for l in S.gaps if all((l + s) in S for s in nonzero))
    assert S.pseudo_frobenius == expected
    # symmetry: l is a gap iff F - l is a member, for 0 <= l <= F
    sym = all((l in S) != ((S.frobenius - l) in S) for l in range(S.frobenius + 1))
    assert S.is_symmetric == sym == (S.type == 1)


def test_apery_sets():
    assert from_generators([2, 3]).apery_set(2) == (0, 3)
    assert from_generators([3, 5]).apery_set(3) == (0, 10, 5)
    with pytest.raises(NotMember):
        from_generators([2, 3]).apery_set(0)
    with pytest.raises(NotMember):
        from_generators([3, 5]).apery_set(4)


def test_dim_O_mod_power():
    assert mumford_semigroup(17, 9).dim_O_mod_power(68) == 44
    assert from_generators([2, 3]).dim_O_mod_power(2) == 1
    S = buchweitz_semigroup()
    # 0, the nine generators and 26..51: 1 + 9 + 26
    assert S.dim_O_mod_power(52) == len([m for m in range(52) if m in S]) == 36
    with pytest.raises(BelowConductor):
        S.dim_O_mod_power(25)


# -- sumsets and Dedekind invariants --------------------------------------------------


def test_sumset_examples():
    for g in range(1, 8):
        assert ordinary_semigroup(g).sumset_size(2) == 2 * g - 1
    S = buchweitz_semigroup()
    assert S.sumset_size(2) == len(sumset_by_loops(S.gaps, 2)) == 46
    assert S.sumset_size(1) == S.genus


@settings(max_examples=60, deadline=None)
@given(semigroup_gens, st.integers(1, 3))
def test_sumset_against_loops(gens, k):
    S = from_generators(gens)
    assume(0 < S.genus <= 30)
    assert S.sumset_size(k) == len(sumset_by_loops(S.gaps, k))


def test_dedekind_examples():
    assert buchweitz_semigroup().dedekind_dk(1) == 33
    K = komeda_semigroup(16)
    assert K.generators == tuple(range(16, 26)) + (28, 29)
    assert K.genus == 19
    assert K.dedekind_dk(1) == 38 == 2 * K.genus
    assert K.dedekind_dk(2) == 77 == 4 * K.genus + 1
    S = from_generators([3, 4, 5])
    assert S.dedekind_dk(1) == dedekind_by_quotient(S, 1)


def test_dedekind_needs_multiplicity_three():
    with pytest.raises(MultiplicityTooSmall):
        from_generators([2, 5]).dedekind_dk(1)
    with pytest.raises(MultiplicityTooSmall):
        from_generators([2, 5]).buchweitz_verdict()


@settings(max_examples=40, deadline=None)
@given(semigroup_gens.filter(lambda g: min(g) >= 3), st.integers(1, 3))
def test_dedekind_against_quotient_oracle(gens, k):
    S = from_generators(gens)
    assume(S.multiplicity >= 3 and S.genus <= 25)
    assert S.dedekind_dk(k) == dedekind_by_quotient(S, k)


def test_symmetric_semigroups_have_gorenstein_dk():
    corpus = [[3, 4], [3, 5], [4, 5], [4, 6, 9], [5, 6, 7], [6, 7, 8, 9, 10],
              [4, 5, 11], [5, 8, 9, 12], [7, 8, 9, 10, 11, 12]]
    seen = 0
    for gens in corpus:
        S = from_generators(gens)
        if not S.is_symmetric or S.multiplicity < 3:
            continue
        seen += 1
        for k in range(1, 5):
            assert S.dedekind_dk(k) == 2 * k * S.genus
        assert S.buchweitz_verdict().outcome is Outcome.UNKNOWN
    assert seen >= 5


def test_buchweitz_verdict_fires_at_one():
    v = buchweitz_semigroup().buchweitz_verdict(kmax=3)
    assert v.outcome is Outcome.NON_SMOOTHABLE
    w = v.witnesses
    assert (w["k"], w["sumset_size"], w["bound"], w["d_k"]) == (1, 46, 45, 33)
    assert w["weierstrass"] is False


def test_komeda_verdict_fires_at_two():
    assert komeda_semigroup(16).buchweitz_verdict(kmax=1).outcome is Outcome.UNKNOWN
    v = komeda_semigroup(16).buchweitz_verdict(kmax=2)
    assert v.outcome is Outcome.NON_SMOOTHABLE and v.witnesses["k"] == 2


def test_ordinary_semigroup_unknown():
    S = ordinary_semigroup(3)
    v = S.buchweitz_verdict(kmax=5)
    assert v.outcome is Outcome.UNKNOWN
    for k in range(1, 6):
        assert S.sumset_size(k + 1) == (k + 1) * (S.genus - 1) + 1
        assert S.sumset_size(k + 1) <= (2 * k + 1) * (S.genus - 1)


def test_report_shape():
    rep = buchweitz_semigroup().report()
    assert set(rep) == {"generators", "gaps", "delta", "frobenius", "conductor", "type",
                        "pseudo_frobenius", "symmetric", "deligne_e", "dedekind", "verdict"}
    assert rep["dedekind"]["1"] == 33
    assert rep["verdict"]["outcome"] == "NON_SMOOTHABLE"


# -- named constructions ---------------------------------------------------------------


def test_mumford_semigroups():
    S = mumford_semigroup(17, 9)
    assert S.generators == tuple(range(17, 26))
    assert (S.genus, S.conductor) == (24, 34)
    T = mumford_semigroup(13, 5)
    assert T.generators == (13, 14, 15, 16, 17, 35, 36, 37, 38)
    assert T.genus == 20 == len(set(range(1, 80)) - members_by_search(T.generators, 80))
    with pytest.raises(BadParameters):
        mumford_semigroup(5, 5)


def test_mumford_genus_grid():
    for d in range(3, 26):
        for n in range(2, d):
            assert mumford_semigroup(d, n).genus == 2 * d - n - 1


def test_komeda_needs_r_eight():
    with pytest.raises(BadParameters):
        komeda_semigroup(7)


def test_double_of_buchweitz():
    S = stohr_torres_double(buchweitz_semigroup(), 100)
    assert S.generators == tuple(2 * a for a in (13, 14, 15, 16, 17, 18, 20, 22, 23)) + (149, 151, 157, 161)
    assert (S.multiplicity, S.embedding_dim, S.genus) == (26, 13, 100)
    assert S.is_symmetric


def test_double_of_small_semigroup():
    base = from_generators([3, 4, 5])
    S = stohr_torres_double(base, 16)
    assert S.genus == 16 and S.is_symmetric
    expected = {2 * s for s in range(40) if s in base} | \
        {2 * 16 - 1 - 2 * t for t in range(-40, 40) if t not in base}
    assert {m for m in range(80) if m in S} == {m for m in expected if 0 <= m < 80}


def test_double_genus_boundary():
    base = buchweitz_semigroup()
    with pytest.raises(GenusTooSmall):
        stohr_torres_double(base, 6 * 16 + 3)
    stohr_torres_double(base, 6 * 16 + 4)


@settings(max_examples=25, deadline=None)
@given(semigroup_gens, st.integers(0, 6))
def test_double_always_symmetric(gens, extra):
    base = from_generators(gens)
    assume(base.genus <= 8)
    g = 6 * base.genus + 4 + extra
    S = stohr_torres_double(base, g)
    assert S.genus == g and S.is_symmetric
