from itertools import combinations

import pytest

from lintersect import (
    BlockSet,
    SolveCertificate,
    SolverTimeout,
    binomial,
    compat_graph,
    enumerate_maximum,
    is_l_intersecting,
    is_uniform,
    max_family,
    projective_plane,
    star,
    sunflower,
)
from lintersect.core import CapExceededError, FamilyError

from oracles import maximum_families, oracle_max


def brute_edges(n, k, L):
    return sum(len(set(a) & set(b)) in L for a, b in combinations(combinations(range(n), k), 2))


def test_graph_small_example():
    g = compat_graph(4, 2, [1])
    assert len(g) == 6
    idx = {BlockSet(v): i for i, v in enumerate(g.vertices)}
    assert g.adjacent(idx[BlockSet.of([1, 2])], idx[BlockSet.of([1, 3])])
    assert not g.adjacent(idx[BlockSet.of([1, 2])], idx[BlockSet.of([3, 4])])


@pytest.mark.parametrize("n,k,L,edges", [(7, 3, [1], 315), (5, 3, [2], 30)])
def test_graph_edge_counts(n, k, L, edges):
    g = compat_graph(n, k, L)
    assert len(g) == binomial(n, k)
    assert g.edge_count == edges == brute_edges(n, k, L)


def test_graph_is_colex_symmetric_irreflexive():
    g = compat_graph(6, 3, [1, 2])
    assert list(g.vertices) == sorted(g.vertices)
    assert g.vertices[0] == 0b111
    for u in range(len(g)):
        assert not g.adjacent(u, u)
        for v in range(len(g)):
            assert g.adjacent(u, v) == g.adjacent(v, u)
            if u != v:
                assert g.adjacent(u, v) == ((g.vertices[u] & g.vertices[v]).bit_count() in (1, 2))


def test_graph_cap_and_validation():
    with pytest.raises(CapExceededError, match=r"C\(30,5\) = 142506 exceeds vertex cap 100000"):
        compat_graph(30, 5, [1], cap=100000)
    with pytest.raises(FamilyError):
        compat_graph(5, 3, [3])
    with pytest.raises(FamilyError):
        compat_graph(3, 4, [1])


@pytest.mark.parametrize("n,k,L,opt", [(7, 3, [1], 7), (8, 2, [1], 7), (6, 3, [2], 4)])
def test_max_family_examples(n, k, L, opt):
    cert = max_family(n, k, L)
    assert cert.optimum == opt == len(cert.witness)
    assert is_uniform(cert.witness, k) and is_l_intersecting(cert.witness, L)
    assert cert.optimal


def test_max_family_matches_oracle_on_mid_instances():
    for n, k, L in [(6, 3, [1]), (6, 3, [0, 2]), (7, 3, [0]), (7, 4, [2]), (8, 3, [0, 2])]:
        assert max_family(n, k, L).optimum == oracle_max(n, k, L)[0]


def test_options_do_not_change_optimum():
    for n, k, L in [(7, 3, [1]), (8, 3, [1, 2]), (8, 4, [2]), (7, 3, [0, 1])]:
        ref = max_family(n, k, L).optimum
        assert max_family(n, k, L, anchor=False).optimum == ref
        assert max_family(n, k, L, use_bound=False).optimum == ref
        assert max_family(n, k, L, anchor=False, use_bound=False).optimum == ref
        assert max_family(n, k, L, workers=2).optimum == ref


def test_deterministic_witness():
    a = max_family(8, 3, [1])
    b = max_family(8, 3, [1])
    assert a.witness == b.witness and a.nodes_explored == b.nodes_explored


def test_k_equals_n():
    cert = max_family(4, 4, [0])
    assert cert.optimum == 1


def test_sandwich_constructions():
    for n in range(4, 9):
        for k in range(2, min(n, 4) + 1):
            for t in range(1, k):
                L = list(range(t, k))
                opt = max_family(n, k, L).optimum
                assert len(star(n, k, t)) <= opt
                m = (n - t) // (k - t)
                assert len(sunflower(n, k, t, m)) <= max_family(n, k, [t]).optimum
    P = projective_plane(2)
    assert len(P.lines) <= max_family(P.n, P.k, [1]).optimum


def test_timeout_is_marked_non_optimal():
    with pytest.raises(SolverTimeout) as info:
        max_family(9, 4, [1, 2, 3], timeout=0.3, use_bound=False)
    cert = info.value.certificate
    assert not cert.optimal
    assert "not optimal" in str(info.value)
    assert cert.optimum == len(cert.witness) > 0
    assert is_l_intersecting(cert.witness, [1, 2, 3])


def test_certificate_roundtrip():
    cert = max_family(7, 3, [1])
    d = cert.to_dict()
    assert d["optimum"] == "7"
    back = SolveCertificate.from_dict(d)
    assert back.witness == cert.witness and back.optimum == 7
    assert back.upper_bound_used == cert.upper_bound_used


@pytest.mark.parametrize("n,k,L,count", [(4, 2, [1], 8), (5, 2, [1], 5), (7, 3, [1], 30)])
def test_enumerate_counts(n, k, L, count):
    en = enumerate_maximum(n, k, L)
    best, fams = maximum_families(n, k, L)
    assert en.complete and en.optimum == best
    got = {frozenset(frozenset(b) for b in f.to_lists()) for f in en.families}
    assert got == fams and len(got) == count


def test_enumerate_cap_flags_incomplete():
    en = enumerate_maximum(7, 3, [1], cap=10)
    assert not en.complete and len(en.families) == 10


def test_enumerate_matches_oracle_sweep():
    for n in range(3, 7):
        for k in range(2, min(n, 3) + 1):
            for r in range(1, k):
                for L in combinations(range(k), r):
                    res = maximum_families(n, k, L)
                    en = enumerate_maximum(n, k, L)
                    got = {frozenset(frozenset(b) for b in f.to_lists()) for f in en.families}
                    assert (en.optimum, got) == res
