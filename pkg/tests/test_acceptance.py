"""Acceptance suite: one test per criterion, each printing a PASS line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the per-criterion
lines.  Every tolerance is pinned here; nothing is deferred to later
calibration.
"""

import math
import time
from pathlib import Path

import pytest

import minorlab as ml
from minorlab import ExperimentConfig, run_suite
from oracles import has_kt_minor_brute

GOLDEN = Path(__file__).parent / "golden"


def report(name: str, detail: str = "") -> None:
    suffix = f" ({detail})" if detail else ""
    print(f"\nACCEPTANCE {name}: PASS{suffix}")


def random_small_graphs(count, seed_base):
    out = []
    for i in range(count):
        n = 3 + i % 6
        p = (0.2, 0.35, 0.5, 0.65, 0.8)[i % 5]
        out.append(ml.gnp_random_graph(n, p, seed=seed_base + i))
    return out


@pytest.fixture(scope="module")
def crosscheck_graphs():
    """The 200 random graphs (n <= 30) used by criteria 2 and 9."""
    graphs = []
    for i in range(200):
        n = 5 + i % 26
        mult = (1.0, 1.3, 1.9, 2.5, 0.0)[i % 5]
        maxm = n * (n - 1) // 2
        m = min(maxm, max(n - 1, int(mult * n))) if mult else maxm // 3
        graphs.append(ml.gnm_random_graph(n, m, seed=31_000 + i))
    return graphs


@pytest.fixture(scope="module")
def extremal_samples():
    """The 50 lower-bound construction samples used by criteria 8 and 9."""
    samples = []
    for i in range(50):
        t = 4 if i % 2 == 0 else 5
        samples.append((t, ml.lower_bound_bipartite(30, 30, t, 0.05, seed=i)))
    return samples


def test_c01_minor_search_agrees_with_partition_oracle():
    """>= 500 random graphs with n <= 8 plus named fixtures, t in {3, 4, 5}."""
    started = time.time()
    fixtures = [
        ml.complete_graph(5),
        ml.complete_graph(6),
        ml.complete_graph(8),
        ml.cycle_graph(8),
        ml.path_graph(8),
        ml.complete_bipartite(3, 3),
        ml.complete_bipartite(2, 3),
        ml.complete_multipartite([2, 2, 2]),
        ml.empty_graph(6),
    ]
    graphs = fixtures + random_small_graphs(500, seed_base=20_000)
    disagreements = 0
    for G in graphs:
        for t in (3, 4, 5):
            oracle = has_kt_minor_brute(G, t)
            model = ml.find_kt_minor_exact(G, t)
            if model is not None:
                assert ml.validate_model(G, model)
            if oracle != (model is not None):
                disagreements += 1
    elapsed = time.time() - started
    assert disagreements == 0
    assert elapsed < 300.0
    report("1 minor-search oracle agreement",
           f"{len(graphs)} graphs x 3 clique orders in {elapsed:.1f}s")


def test_c02_named_fixtures_and_series_parallel_crosscheck(crosscheck_graphs):
    assert ml.hadwiger_number(ml.petersen_graph()) == 5
    assert ml.hadwiger_number(ml.complete_bipartite(3, 3)) == 4
    assert ml.hadwiger_number(ml.complete_graph(6)) == 6
    disagreements = sum(
        1
        for G in crosscheck_graphs
        if ml.k4_minor_free(G) != (ml.find_kt_minor_exact(G, 4, fast_paths=False) is None)
    )
    assert disagreements == 0
    report("2 named fixtures + series-parallel crosscheck",
           f"{len(crosscheck_graphs)} random graphs, 0 disagreements")


def test_c03_dense_model_pipeline():
    # complete graphs: success on the first trial for every t in 2..6
    for t in range(2, 7):
        G = ml.complete_graph(9 * t)
        model = ml.dense_random_model(G, ml.DenseModelParams(t=t, trials=1, seed=0))
        assert model is not None and ml.validate_model(G, model)

    # near-complete fixture: n=180, t=4, p=0.995, condition pre-verified
    G = ml.gnp_random_graph(180, 0.995, seed=ml.derive_seed(0, 1_000_003))
    l = 180 // (9 * 4)
    assert ml.dense_condition_holds(G, 4, l)
    successes = 0
    for i in range(200):
        model = ml.dense_random_model(
            G, ml.DenseModelParams(t=4, trials=1, seed=ml.derive_seed(0, i))
        )
        if model is not None:
            assert ml.validate_model(G, model)  # 100% of returned models
            successes += 1
    assert successes / 200 >= 0.5
    report("3 dense randomized model pipeline",
           f"near-complete fixture success {successes}/200")


def test_c04_decomposition_random_suite():
    # the in-loop strict decrease of |X| is asserted inside the implementation
    runs = 0
    for i in range(102):
        k = 1 + i % 3
        n = 20 + 6 * k + (i * 7) % (121 - 20 - 6 * k)
        G = ml.random_graph_min_degree(n, 6 * k, seed=8000 + i)
        D = ml.small_coboundary_piece(G, k)
        problems = ml.check_decomposition(G, D)
        assert problems == [], (i, k, n, problems)
        assert len(D.Y) <= 3 * k
        runs += 1
    assert runs >= 100
    report("4 coboundary decomposition", f"{runs} random graphs, all re-verified")


def test_c05_coloring_validity_mass():
    """Every coloring ever returned verifies; >= 10^4 runs in this test alone."""
    runs = 0
    invalid = 0

    def tally(G, lists, coloring, need_complete=True):
        nonlocal runs, invalid
        runs += 1
        if coloring is None:
            return
        if not ml.verify_list_coloring(G, lists, coloring):
            invalid += 1
        elif need_complete and len(coloring) != G.n:
            invalid += 1

    # degeneracy-greedy sweep
    for i in range(4000):
        n = 4 + i % 9
        G = ml.gnp_random_graph(n, 0.4, seed=40_000 + i)
        d, _ = ml.degeneracy(G)
        lists = ml.random_lists(n, d + 1, universe=2 * d + 4, seed=i)
        tally(G, lists, ml.degeneracy_list_color(G, lists))

    # multipartite sweep over small complete multipartite graphs
    shapes = [[2, 2], [3, 2], [2, 2, 2], [3, 3], [4, 3]]
    for i in range(3000):
        sizes = shapes[i % len(shapes)]
        G = ml.complete_multipartite(sizes)
        parts = ml.turan_parts(sizes)
        lists = ml.uniform_lists(G.n, 3 + i % 4)
        tally(G, lists,
              ml.multipartite_list_color(G, parts, lists, trials=4, seed=i),
              need_complete=False)

    # exact search sweep (tight random lists, failures allowed)
    for i in range(2500):
        n = 4 + i % 4
        G = ml.gnp_random_graph(n, 0.5, seed=60_000 + i)
        lists = ml.random_lists(n, 2 + i % 2, universe=5, seed=i)
        tally(G, lists, ml.exact_list_color(G, lists))

    # sequential greedy sweep
    for i in range(1000):
        n = 5 + i % 6
        G = ml.gnp_random_graph(n, 0.3, seed=80_000 + i)
        lists = ml.uniform_lists(n, n)
        tally(G, lists, ml.greedy_list_color(G, lists))

    assert runs >= 10_000
    assert invalid == 0
    report("5a coloring validity", f"{runs} runs, zero invalid colorings")


def test_c05_minorfree_petersen_seed_sweep():
    P = ml.petersen_graph()
    lists = ml.uniform_lists(10, 12)
    successes = 0
    for seed in range(100):
        c = ml.minor_free_list_color(P, lists, d=6, seed=seed)
        if c is not None and len(c) == 10:
            assert ml.verify_list_coloring(P, lists, c)
            successes += 1
    assert successes >= 99
    report("5b peel-and-recolor on the Petersen graph", f"{successes}/100 seeds")


def test_c06_multipartite_rate_and_c4_choosability():
    from test_coloring import canonical_list_assignments

    m, r = 4, 3
    G = ml.complete_multipartite([m] * r)
    parts = ml.turan_parts([m] * r)
    size = math.ceil(6 * r * math.log(m))
    assert size == 25
    lists = ml.uniform_lists(G.n, size)
    ok = 0
    for seed in range(1000):
        c = ml.multipartite_list_color(G, parts, lists, trials=1, seed=seed)
        if c is not None:
            assert ml.verify_list_coloring(G, lists, c)
            ok += 1
    assert ok / 1000 >= 0.95

    C4 = ml.cycle_graph(4)
    assignments = canonical_list_assignments(4, 2)
    for two_lists in assignments:
        c = ml.exact_list_color(C4, two_lists)
        assert c is not None and ml.verify_list_coloring(C4, two_lists, c)
    report("6 random multipartite coloring",
           f"rate {ok}/1000; C4 2-choosable over {len(assignments)} assignments")


def test_c07_density_constant():
    lam, x_star = ml.lambda_constant(1e-6)
    assert abs(lam - 0.63817) <= 1e-4
    residual = abs(2 * x_star * math.exp(-x_star) - (1 - math.exp(-x_star)))
    assert residual <= 1e-6
    report("7 extremal density constant",
           f"value {lam:.6f}, stationarity residual {residual:.2e}")


def test_c08_extremal_constructions(extremal_samples):
    # exact minor-freeness of every sampled lower-bound construction
    free = 0
    for t, G in extremal_samples:
        assert G.n <= 60
        if ml.find_kt_minor_exact(G, t) is None:
            free += 1
    assert free == len(extremal_samples)

    # connectivity concentration at b = 60, eps = 0.5
    b, eps = 60, 0.5
    threshold = math.ceil((1 - eps) * b / 2)
    hits = 0
    for i in range(100):
        G = ml.gen_bipartite(ml.BipartiteSpec(b, b, 0.5, ml.derive_seed(17, i)))
        parts = (frozenset(range(b)), frozenset(range(b, 2 * b)))
        if ml.connectivity_at_least(G, threshold, parts=parts):
            hits += 1
    assert hits / 100 >= 0.95
    predicted_failure = math.exp(-eps * eps * b / 64)
    assert (100 - hits) / 100 <= 10 * predicted_failure
    report("8 extremal constructions",
           f"{free}/50 minor-free; connectivity rate {hits}/100")


def test_c09_independence_bound(crosscheck_graphs, extremal_samples):
    checked = 0
    for t, G in extremal_samples:
        alpha = ml.exact_alpha(G)
        assert alpha >= G.n / (2 * (t - 1))
        checked += 1
    for G in crosscheck_graphs:
        if ml.k4_minor_free(G):
            alpha = ml.exact_alpha(G)
            assert alpha >= G.n / (2 * 3)
            checked += 1
    assert checked > 50
    report("9 independence lower bound", f"{checked} minor-free graphs, 0 violations")


def test_c10_determinism_and_golden_reports(tmp_path):
    # every suite, rerun with the same master seed, byte-identical
    for suite in ml.SUITES:
        config = ExperimentConfig(suite=suite, trials=2, seed=33, max_n=40)
        first = run_suite(config)
        second = run_suite(config)
        assert first.json_text() == second.json_text(), suite
        assert first.csv_text() == second.csv_text(), suite

    # serial and parallel execution agree
    for suite in ("alon", "bounds"):
        serial = run_suite(ExperimentConfig(suite=suite, trials=6, seed=3, workers=1))
        parallel = run_suite(ExperimentConfig(suite=suite, trials=6, seed=3, workers=2))
        assert serial.json_text() == parallel.json_text(), suite
        assert serial.csv_text() == parallel.csv_text(), suite

    # frozen golden files for the pure-arithmetic suite
    report_obj = run_suite(ExperimentConfig(suite="bounds", trials=8, seed=0))
    assert report_obj.json_text() == (GOLDEN / "bounds.json").read_text()
    assert report_obj.csv_text() == (GOLDEN / "bounds.csv").read_text()
    report("10 determinism", "reruns, worker pools, and golden files all byte-equal")
