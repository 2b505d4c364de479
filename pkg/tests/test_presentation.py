from collections import Counter
from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from smoothability.errors import BadParameters
from smoothability.presentation import (
    factorizations,
    minimal_presentation,
    mumford_verdict,
    t1_graded_monomial,
    t1_positive_total,
    t1_profile,
)
from smoothability.semigroup import (
    buchweitz_semigroup,
    from_generators,
    komeda_semigroup,
    mumford_semigroup,
)
from smoothability.verdict import Outcome

CORPUS = [
    [2, 3], [3, 4], [3, 5, 7], [4, 5, 6, 7], [4, 6, 9], [5, 7, 9, 11], [6, 7, 8, 9, 10],
    [8, 12, 18, 22, 51, 55], [13, 14, 15, 16, 17, 18, 20, 22, 23], [7, 9, 11, 13],
]


def plane_curve_t1(a, b):
    """T^1 of x^b - y^a (weights a, b): the Milnor algebra k[x,y]/(x^(b-1), y^(a-1)),
    a monomial x^i y^j sitting in degree a*i + b*j - a*b."""
    return Counter(a * i + b * j - a * b for i in range(b - 1) for j in range(a - 1))


def test_cusp_presentation():
    P = minimal_presentation(from_generators([2, 3]))
    assert len(P) == 1
    rel = P.relations[0]
    assert (rel.alpha, rel.beta, rel.q, rel.v) == ((3, 0), (0, 2), 6, (3, -2))
    assert rel.format((2, 3)) == "x2^3 - x3^2 @ degree 6"


def test_thirteen_relations():
    assert len(minimal_presentation(from_generators([8, 12, 18, 22, 51, 55]))) == 13


@pytest.mark.parametrize("gens", CORPUS)
def test_graph_method_matches_factorizations(gens):
    S = from_generators(gens)
    a = minimal_presentation(S, "graph")
    b = minimal_presentation(S, "factorizations")
    assert Counter(a.betti_degrees) == Counter(b.betti_degrees)


@pytest.mark.parametrize("gens", CORPUS)
def test_relation_invariants(gens):
    S = from_generators(gens)
    P = minimal_presentation(S)
    for rel in P.relations:
        rel.check(S.generators)
        assert rel.q in S
        assert rel.q >= S.generators[0] + S.generators[1]


def test_factorizations_enumerate_everything():
    S = from_generators([3, 5, 7])
    for s in range(40):
        facts = factorizations(S, s)
        brute = {(i, j, k) for i in range(14) for j in range(9) for k in range(6)
                 if 3 * i + 5 * j + 7 * k == s}
        assert set(facts) == brute


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 15), st.integers(2, 15))
def test_two_generators_one_relation(a, b):
    if gcd(a, b) != 1 or a == b:
        return
    assert len(minimal_presentation(from_generators([a, b]))) == 1


def test_complete_intersections():
    # gluings of <a,b> type are complete intersections: n - 1 relations
    for gens in ([4, 6, 9], [6, 10, 15], [4, 6, 11], [8, 10, 12, 15]):
        S = from_generators(gens)
        assert len(minimal_presentation(S)) == S.embedding_dim - 1


@pytest.mark.parametrize("gens", CORPUS)
def test_no_relations_past_the_window(gens):
    S = from_generators(gens)
    a = S.generators
    hi = S.conductor + (a[-2] + a[-1] if len(a) > 1 else 0)
    for s in range(hi, hi + 3 * a[0]):
        facts = factorizations(S, s)
        supports = [frozenset(i for i, e in enumerate(f) if e) for f in facts]
        # connected factorization graph: union-find over shared generators
        parent = list(range(len(facts)))

        def find(x):
            while parent[x] != x:
                x = parent[x]
            return x

        for i in range(len(facts)):
            for j in range(i):
                if supports[i] & supports[j]:
                    parent[find(i)] = find(j)
        assert len({find(i) for i in range(len(facts))}) == 1


def test_cusp_t1():
    P = minimal_presentation(from_generators([2, 3]))
    dims = {ell: t1_graded_monomial(P, ell) for ell in range(-12, 13)}
    assert {k: v for k, v in dims.items() if v} == {-4: 1, -6: 1}
    assert t1_graded_monomial(P, -5) == 0
    assert t1_profile(P).total == 2


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 9), st.integers(2, 9))
def test_plane_curve_t1_against_milnor_algebra(a, b):
    if gcd(a, b) != 1 or a >= b:
        return
    P = minimal_presentation(from_generators([a, b]))
    prof = t1_profile(P, -3 * a * b, 3 * a * b)
    assert prof.by_degree == dict(plane_curve_t1(a, b))


@pytest.mark.parametrize("gens", CORPUS)
def test_t1_finite_support(gens):
    S = from_generators(gens)
    P = minimal_presentation(S)
    a = S.generators
    for ell in range(S.conductor - a[0], S.conductor - a[0] + 20):
        assert t1_graded_monomial(P, ell) == 0
    # below -max(q_i) every v_i lies in V_ell, which then has rank n - 1
    low = -max(P.betti_degrees)
    assert low >= -(S.conductor + sum(a[-2:]))
    for ell in range(low - 20, low):
        assert t1_graded_monomial(P, ell) == 0
    prof = t1_profile(P)
    assert all(v > 0 for v in prof.by_degree.values())
    assert prof.total == prof.total_positive + prof.total_negative + prof.by_degree.get(0, 0)


def test_mumford_17_9():
    S = mumford_semigroup(17, 9)
    P = minimal_presentation(S)
    assert t1_positive_total(P) == 56
    for ell in range(S.conductor - S.generators[0], S.conductor + 5):
        assert t1_graded_monomial(P, ell) == 0


def test_mumford_13_9():
    assert t1_positive_total(minimal_presentation(mumford_semigroup(13, 9))) == 24


def test_cusp_has_no_positive_t1():
    assert t1_positive_total(minimal_presentation(from_generators([2, 3]))) == 0


def test_mumford_grid():
    for d in range(3, 26):
        for n in range(2, min(d, 13)):
            P = minimal_presentation(mumford_semigroup(d, n))
            assert t1_positive_total(P) == (n - 1) * (d - n - 1), (d, n)


def test_mumford_verdicts():
    v = mumford_verdict(17, 9)
    assert v.outcome is Outcome.NON_SMOOTHABLE_GENERIC_EQUISINGULAR
    assert (v.witnesses["t1_positive"], v.witnesses["deligne_e"]) == (56, 55)
    assert v.witnesses["(n-6)(d-n-3)"] == 15
    w = mumford_verdict(13, 9)
    assert w.outcome is Outcome.UNKNOWN
    assert w.witnesses["(n-6)(d-n-3)"] == 3
    x = mumford_verdict(20, 10)
    assert x.outcome is Outcome.NON_SMOOTHABLE_GENERIC_EQUISINGULAR
    assert x.witnesses["(n-6)(d-n-3)"] == 28
    with pytest.raises(BadParameters):
        mumford_verdict(5, 5)


def test_mumford_verdict_inequalities_agree():
    # the verdict asserts internally that both forms of the inequality agree
    for d in range(8, 24):
        for n in range(7, d):
            mumford_verdict(d, n)


def test_presentation_of_larger_semigroups():
    assert len(minimal_presentation(buchweitz_semigroup())) > 0
    K = komeda_semigroup(10)
    P = minimal_presentation(K)
    assert Counter(P.betti_degrees) == Counter(minimal_presentation(K, "factorizations").betti_degrees)
