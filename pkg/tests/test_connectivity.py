import pytest

import minorlab as ml
from oracles import kappa_brute


def test_kappa_complete():
    assert ml.vertex_connectivity(ml.complete_graph(5)) == 4


def test_kappa_cycle():
    assert ml.vertex_connectivity(ml.cycle_graph(6)) == 2


def test_kappa_petersen():
    assert ml.vertex_connectivity(ml.petersen_graph()) == 3


def test_kappa_petersen_brute_force_cuts():
    # no cut of size <= 2 disconnects, some cut of size 3 does
    assert kappa_brute(ml.petersen_graph()) == 3


def test_kappa_needs_two_vertices():
    with pytest.raises(ml.PreconditionError):
        ml.vertex_connectivity(ml.empty_graph(1))


def test_kappa_disconnected_is_zero():
    G = ml.from_edge_list(4, [(0, 1), (2, 3)])
    assert ml.vertex_connectivity(G) == 0


def test_kappa_complete_bipartite():
    assert ml.vertex_connectivity(ml.complete_bipartite(3, 5)) == 3


def test_kappa_random_cross_check():
    for i in range(120):
        n = 2 + i % 7
        p = (0.2, 0.4, 0.6, 0.8)[i % 4]
        G = ml.gnp_random_graph(n, p, seed=700 + i)
        assert ml.vertex_connectivity(G) == kappa_brute(G), (n, p, i)


def test_minimum_separation_properties():
    for i in range(60):
        n = 4 + i % 5
        G = ml.gnp_random_graph(n, 0.5, seed=900 + i)
        if G.is_complete():
            continue
        A, B = ml.minimum_separation(G)
        kappa = ml.vertex_connectivity(G)
        assert A | B == set(range(G.n))
        assert len(A & B) == kappa
        assert A - B and B - A
        for u in A - B:
            for v in B - A:
                assert not G.has_edge(u, v)


def test_minimum_separation_rejects_complete():
    with pytest.raises(ml.InputError):
        ml.minimum_separation(ml.complete_graph(4))


def test_connectivity_at_least_matches_exact():
    for i in range(40):
        G = ml.gnp_random_graph(7, 0.5, seed=1500 + i)
        kappa = ml.vertex_connectivity(G)
        for k in range(1, 7):
            assert ml.connectivity_at_least(G, k) == (kappa >= k)


def test_connectivity_certificate_bipartite():
    G = ml.gen_bipartite(ml.BipartiteSpec(40, 40, 0.5, 3))
    parts = (frozenset(range(40)), frozenset(range(40, 80)))
    want = ml.vertex_connectivity(G)
    assert ml.connectivity_at_least(G, want, parts=parts)
    assert not ml.connectivity_at_least(G, want + 1, parts=parts)
