import pytest

import minorlab as ml


def two_cliques_bridged(k_size, bridges):
    """Two disjoint K_{k_size} joined by `bridges` disjoint edges."""
    edges = []
    for base in (0, k_size):
        edges += [
            (base + u, base + v)
            for u in range(k_size)
            for v in range(u + 1, k_size)
        ]
    edges += [(i, k_size + i) for i in range(bridges)]
    return ml.from_edge_list(2 * k_size, edges)


# -- coboundary -------------------------------------------------------------


def test_coboundary_of_everything_is_empty():
    G = ml.petersen_graph()
    assert ml.coboundary(G, range(10)) == frozenset()


def test_coboundary_single_vertex_on_cycle():
    assert ml.coboundary(ml.cycle_graph(6), {0}) == frozenset({1, 5})


def test_coboundary_petersen_outer_cycle():
    assert ml.coboundary(ml.petersen_graph(), range(5)) == frozenset(range(5, 10))


# -- small_coboundary_piece --------------------------------------------------


def test_whole_clique_is_its_own_piece():
    for k in (1, 2):
        G = ml.complete_graph(6 * k + 1)
        D = ml.small_coboundary_piece(G, k)
        assert D.X == frozenset(range(6 * k + 1))
        assert D.Y == frozenset()
        assert D.matching == ()
        assert ml.check_decomposition(G, D) == []


def test_bridged_cliques_fixture_invariants():
    # min degree 12 >= 6k for k=2; the checker re-verifies every invariant
    G = two_cliques_bridged(13, 6)
    D = ml.small_coboundary_piece(G, 2)
    assert ml.check_decomposition(G, D) == []
    assert len(D.Y) <= 6


def test_sparse_bridge_forces_descent():
    # a single bridge keeps min degree 12 but kappa = 1 < 2, so the loop
    # must descend into one clique side
    G = two_cliques_bridged(13, 1)
    D = ml.small_coboundary_piece(G, 2)
    assert ml.check_decomposition(G, D) == []
    assert len(D.X) < G.n


def test_low_degree_vertex_is_rejected():
    G = ml.from_edge_list(8, [(0, 1)])
    with pytest.raises(ml.PreconditionError):
        ml.small_coboundary_piece(G, 1)


def test_k_must_be_positive():
    with pytest.raises(ml.InputError):
        ml.small_coboundary_piece(ml.complete_graph(7), 0)


def test_random_forced_degree_pieces_verify():
    for i in range(12):
        k = 1 + i % 3
        n = 30 + 7 * i
        G = ml.random_graph_min_degree(n, 6 * k, seed=4000 + i)
        D = ml.small_coboundary_piece(G, k)
        assert ml.check_decomposition(G, D) == [], (i, k, n)


# -- peel_piece ---------------------------------------------------------------


def test_peel_tree_gives_low_degree_singleton():
    X = ml.peel_piece(ml.path_graph(9), 6)
    assert len(X) == 1


def test_peel_dense_clique_gives_everything():
    X = ml.peel_piece(ml.complete_graph(20), 6)
    assert X == frozenset(range(20))
    assert ml.coboundary(ml.complete_graph(20), X) == frozenset()


def test_peel_regular_graph_coboundary_bound():
    G = ml.random_graph_min_degree(60, 12, seed=77)
    X = ml.peel_piece(G, 12)
    assert ml.coboundary(G, X) == frozenset() or len(ml.coboundary(G, X)) <= 12


def test_peel_requires_d_at_least_six():
    with pytest.raises(ml.InputError):
        ml.peel_piece(ml.complete_graph(8), 5)


def test_peel_coboundary_bound_random_suite():
    for i in range(25):
        G = ml.random_graph_min_degree(20 + 3 * i, 7, seed=5000 + i)
        X = ml.peel_piece(G, 7)
        assert len(ml.coboundary(G, X)) <= 7


# -- checker ------------------------------------------------------------------


def test_checker_flags_wrong_coboundary():
    G = ml.complete_graph(13)
    good = ml.small_coboundary_piece(G, 2)
    bad = ml.Decomposition(
        X=good.X - {0}, Y=good.Y, matching=good.matching, k=good.k
    )
    assert "coboundary-mismatch" in ml.check_decomposition(G, bad)


def test_checker_flags_unsaturated_matching():
    G = two_cliques_bridged(13, 1)
    D = ml.small_coboundary_piece(G, 2)
    assert D.matching  # the descent fixture has a non-trivial matching
    bad = ml.Decomposition(X=D.X, Y=D.Y, matching=(), k=D.k)
    assert "matching-does-not-saturate" in ml.check_decomposition(G, bad)
